use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Tag for the two coefficient rings the engine works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Z2,
    LaurentZ,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::Z2 => "Z/2",
            Ring::LaurentZ => "Z[t,t^-1]",
        }
    }
}

/// Commutative coefficient ring of a free algebra.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    const RING: Ring;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// `sign · t^exp`; over Z/2 this is 1.
    fn signed_monomial(negative: bool, t_exp: i64) -> Self;

    /// Build from a Laurent polynomial (over Z/2: evaluate at t = 1, reduce mod 2).
    fn from_laurent(l: &Laurent) -> Self;

    /// Render as a coefficient in front of a word. Returns the sign
    /// separately so that sums print as `a - b` rather than `a + -b`.
    fn render(&self) -> (bool, String);
}

/// An element of Z/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Z2(pub bool);

impl Coefficient for Z2 {
    const RING: Ring = Ring::Z2;

    fn zero() -> Self {
        Z2(false)
    }
    fn one() -> Self {
        Z2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn is_one(&self) -> bool {
        self.0
    }
    fn add(&self, other: &Self) -> Self {
        Z2(self.0 ^ other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Z2(self.0 & other.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn signed_monomial(_negative: bool, _t_exp: i64) -> Self {
        Z2(true)
    }
    fn from_laurent(l: &Laurent) -> Self {
        let total: BigInt = l.0.values().sum();
        Z2(!(total % 2u32).is_zero())
    }
    fn render(&self) -> (bool, String) {
        (false, String::new())
    }
}

/// An integer Laurent polynomial in `t`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Laurent(BTreeMap<i64, BigInt>);

impl Laurent {
    pub fn monomial(coef: impl Into<BigInt>, exp: i64) -> Self {
        let c = coef.into();
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(exp, c);
        }
        Laurent(m)
    }

    pub fn integer(c: impl Into<BigInt>) -> Self {
        Laurent::monomial(c, 0)
    }

    pub fn t_power(exp: i64) -> Self {
        Laurent::monomial(1, exp)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.0.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.0.get(&exp).cloned().unwrap_or_default()
    }

    /// Value at t = 1.
    pub fn at_one(&self) -> BigInt {
        self.0.values().sum()
    }

    fn add_term(&mut self, exp: i64, c: &BigInt) {
        let e = self.0.entry(exp).or_default();
        *e += c;
        if e.is_zero() {
            self.0.remove(&exp);
        }
    }
}

fn render_t(exp: i64) -> String {
    match exp {
        0 => String::new(),
        1 => "t".to_string(),
        e => format!("t^{e}"),
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.0.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let t = render_t(e);
            match (mag.is_one(), t.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{t}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag} {t}")?,
            }
        }
        Ok(())
    }
}

impl Coefficient for Laurent {
    const RING: Ring = Ring::LaurentZ;

    fn zero() -> Self {
        Laurent(BTreeMap::new())
    }
    fn one() -> Self {
        Laurent::integer(1)
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.get(&0).is_some_and(|c| c.is_one())
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.0 {
            out.add_term(e, c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Laurent::zero();
        for (&e1, c1) in &self.0 {
            for (&e2, c2) in &other.0 {
                let e = e1.checked_add(e2).expect("t-exponent overflow");
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Laurent(self.0.iter().map(|(&e, c)| (e, -c)).collect())
    }
    fn signed_monomial(negative: bool, t_exp: i64) -> Self {
        Laurent::monomial(if negative { -1 } else { 1 }, t_exp)
    }
    fn from_laurent(l: &Laurent) -> Self {
        l.clone()
    }
    fn render(&self) -> (bool, String) {
        if self.0.len() == 1 {
            let (&e, c) = self.0.iter().next().unwrap();
            let mag = Laurent::monomial(c.abs(), e);
            let s = if mag.is_one() { String::new() } else { mag.to_string() };
            return (c.is_negative(), s);
        }
        (false, format!("({self})"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_arithmetic() {
        let a = Laurent::t_power(-1);
        let b = Laurent::t_power(1);
        assert!(a.mul(&b).is_one());
        assert!(a.add(&a.neg()).is_zero());
        let c = Laurent::integer(3).add(&Laurent::monomial(-2, 2));
        assert_eq!(c.to_string(), "-2 t^2 + 3");
        assert_eq!(c.at_one(), BigInt::from(1));
    }

    #[test]
    fn z2_from_laurent_evaluates_at_one() {
        let l = Laurent::integer(1).add(&Laurent::t_power(-1));
        assert!(Z2::from_laurent(&l).is_zero());
        assert!(Z2::from_laurent(&Laurent::monomial(-1, 4)).is_one());
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let mut x = Laurent::integer(i64::MAX);
        for _ in 0..4 {
            x = x.mul(&x);
        }
        assert!(x.coefficient(0) > BigInt::from(i64::MAX));
    }

    #[test]
    fn coefficient_rendering() {
        assert_eq!(Laurent::monomial(-1, -1).render(), (true, "t^-1".to_string()));
        assert_eq!(Laurent::integer(-1).render(), (true, String::new()));
        assert_eq!(Laurent::monomial(2, 1).render(), (false, "2 t".to_string()));
    }
}
