//! Choice of the reduction prime for a bicritical Belyi polynomial.

use serde::Serialize;

use crate::critforms::{belyi_poly, BelyiParams};
use crate::error::{Error, Result};
use crate::exactalg::field::{is_prime, mod_inverse};
use crate::exactalg::{Fp, MultiPoly, PrimeField, QMultiPoly, Var};

/// A prime `p > k + 1` dividing exactly one `d - r`, with `t p = d - r` and
/// `B_{d,k} = s z^(tp) mod p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SylvesterDatum {
    pub d: usize,
    pub k: usize,
    pub p: u64,
    pub r: usize,
    pub t: usize,
    pub s: u64,
}

impl SylvesterDatum {
    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("p is prime")
    }

    pub fn s_elem(&self) -> Fp {
        self.field().elem(self.s as i64)
    }

    /// `t p`, the degree of the reduced map.
    pub fn exponent(&self) -> u64 {
        (self.t as u64) * self.p
    }
}

fn s_mod_p(d: usize, k: usize, r: usize, p: u64) -> u64 {
    let mut num = 1u64;
    for j in (0..=k).filter(|&j| j != r) {
        num = num * ((d - j) as u64 % p) % p;
    }
    let mut den = 1u64;
    for i in (1..=k - r).chain(1..=r) {
        den = den * (i as u64 % p) % p;
    }
    let mut s = num * mod_inverse(den, p).expect("p exceeds k") % p;
    if (k - r) % 2 == 1 {
        s = (p - s) % p;
    }
    s
}

/// Smallest qualifying prime. Needs `3 <= d` and `1 <= k <= ceil((d - 2) / 2)`.
pub fn sylvester_datum(d: usize, k: usize) -> Result<SylvesterDatum> {
    let bp = BelyiParams::new(d, k)?;
    if !bp.is_canonical() {
        return Err(Error::InvalidInput(format!(
            "k = {k} exceeds {}; swap the critical points first",
            BelyiParams::canonical_bound(d)
        )));
    }
    for p in (k as u64 + 2..=d as u64).filter(|&p| is_prime(p)) {
        let hits: Vec<usize> = (0..=k).filter(|&j| (d - j) as u64 % p == 0).collect();
        if hits.len() != 1 {
            continue;
        }
        let r = hits[0];
        let s = s_mod_p(d, k, r, p);
        if s == 0 {
            return Err(Error::TheoremCheck(format!("s vanishes mod {p} for d = {d}, k = {k}")));
        }
        return Ok(SylvesterDatum { d, k, p, r, t: (d - r) / p as usize, s });
    }
    Err(Error::TheoremCheck(format!("no prime above {} divides d(d-1)...(d-{k}) for d = {d}", k + 1)))
}

/// `B_{d,k}` mod `p`, checked to be the single monomial `s z^(tp)`.
pub fn belyi_reduce_mod_p(bp: BelyiParams, sd: &SylvesterDatum) -> Result<MultiPoly<Fp>> {
    let field = sd.field();
    let reduced = QMultiPoly::from_unipoly(&belyi_poly(bp), Var::Z).reduce_mod(&field)?;
    let mut e = [0u32; 5];
    e[Var::Z.index()] = sd.exponent() as u32;
    let expected = MultiPoly::monomial(sd.s_elem(), e, field);
    if reduced != expected {
        return Err(Error::TheoremCheck(format!(
            "B_({},{}) mod {} is {reduced}, expected {expected}",
            bp.d, bp.k, sd.p
        )));
    }
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(d: usize, k: usize) -> (u64, usize, usize, u64) {
        let s = sylvester_datum(d, k).unwrap();
        (s.p, s.r, s.t, s.s)
    }

    #[test]
    fn small_data() {
        assert_eq!(datum(3, 1), (3, 0, 1, 1));
        assert_eq!(datum(4, 1), (3, 1, 1, 1));
        assert_eq!(datum(10, 4), (7, 3, 1, 1));
        // 8, 7: p = 7 divides 7 only
        assert_eq!(datum(8, 1), (7, 1, 1, 1));
    }

    #[test]
    fn rejects_non_canonical_k() {
        assert!(matches!(sylvester_datum(10, 7), Err(Error::InvalidInput(_))));
        assert!(sylvester_datum(2, 1).is_err());
    }

    #[test]
    fn reductions_are_monomials() {
        for (d, k) in [(3, 1), (4, 1), (10, 4)] {
            let bp = BelyiParams::new(d, k).unwrap();
            let sd = sylvester_datum(d, k).unwrap();
            let m = belyi_reduce_mod_p(bp, &sd).unwrap();
            assert_eq!(m.num_terms(), 1);
            assert_eq!(m.degree_in(Var::Z), Some(sd.exponent() as u32));
        }
        let bp = BelyiParams::new(4, 1).unwrap();
        let wrong = SylvesterDatum { s: 2, ..sylvester_datum(4, 1).unwrap() };
        assert!(matches!(belyi_reduce_mod_p(bp, &wrong), Err(Error::TheoremCheck(_))));
    }
}
