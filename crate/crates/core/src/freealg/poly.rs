use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coeff::{Coefficient, Laurent, Ring, Z2};
use super::word::{Gen, Names, Word};
use crate::error::{Error, Result};

/// An element of the free unital algebra over `C`: a finitely supported map
/// from words to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly<C> {
    terms: BTreeMap<Word, C>,
}

pub type Z2Poly = Poly<Z2>;
pub type LaurentPoly = Poly<Laurent>;

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Word::one(), C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Word::one(), c)
    }

    pub fn gen(g: Gen) -> Self {
        Self::monomial(Word::letter(g), C::one())
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, C::one())
    }

    pub fn monomial(w: Word, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    /// Sum of words with unit coefficients (over Z/2, repeated words cancel).
    pub fn from_words<I: IntoIterator<Item = Word>>(it: I) -> Self {
        Self::from_terms(it.into_iter().map(|w| (w, C::one())))
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Word::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> {
        self.terms.iter().rev()
    }

    pub fn words(&self) -> impl DoubleEndedIterator<Item = &Word> {
        self.terms.keys().rev()
    }

    pub fn coefficient(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading(&self) -> Option<(&Word, &C)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(w, _)| w.len())
    }

    pub fn generators(&self) -> std::collections::BTreeSet<Gen> {
        self.terms.keys().flat_map(|w| w.letters().iter().copied()).collect()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, k)| (w.clone(), k.mul(c))))
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        Poly {
            terms: self.terms.iter().map(|(w, c)| (w.sandwich(left.letters(), right.letters()), c.clone())).collect(),
        }
    }

    /// Re-normalize: drop zero coefficients. Values built through the public
    /// API are always normal, so this is the identity on them.
    pub fn normalized(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c.clone())))
    }

    /// Unital ring homomorphism determined by the images of generators.
    pub fn substitute_with<F>(&self, mut image: F) -> Result<Self>
    where
        F: FnMut(Gen) -> Option<Self>,
    {
        let mut cache: BTreeMap<Gen, Self> = BTreeMap::new();
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for &g in w.letters() {
                let img = match cache.entry(g) {
                    Entry::Occupied(e) => e.into_mut(),
                    Entry::Vacant(e) => e.insert(image(g).ok_or(Error::MissingAssignment(g))?),
                };
                acc = &acc * img;
                if acc.is_zero() {
                    break;
                }
            }
            out += acc;
        }
        Ok(out)
    }

    pub fn substitute(&self, assignment: &BTreeMap<Gen, Self>) -> Result<Self> {
        self.substitute_with(|g| assignment.get(&g).cloned())
    }

    /// Relabel generators; total on the generators that occur.
    pub fn rename(&self, map: impl Fn(Gen) -> Gen) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.letters().iter().map(|&g| map(g)).collect(), c.clone())))
    }

    pub fn to_z2(&self) -> Z2Poly
    where
        C: IntoZ2,
    {
        Poly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c.reduce_z2())))
    }

    pub fn render(&self, names: &Names) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms().enumerate() {
            let (neg, mag) = c.render();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let ws = names.word(w);
            match (mag.is_empty(), w.is_one()) {
                (true, _) => s.push_str(&ws),
                (false, true) => s.push_str(&mag),
                (false, false) => {
                    s.push_str(&mag);
                    s.push(' ');
                    s.push_str(&ws);
                }
            }
        }
        s
    }
}

/// Reduction to Z/2 at t = 1.
pub trait IntoZ2 {
    fn reduce_z2(&self) -> Z2;
}

impl IntoZ2 for Z2 {
    fn reduce_z2(&self) -> Z2 {
        *self
    }
}

impl IntoZ2 for Laurent {
    fn reduce_z2(&self) -> Z2 {
        Z2::from_laurent(self)
    }
}

impl LaurentPoly {
    /// Lift a Z/2 polynomial to integer coefficients 1.
    pub fn lift_z2(p: &Z2Poly) -> Self {
        Poly::from_words(p.words().cloned())
    }
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&Names::Indexed))
    }
}

/// Serialized as the canonical text rendering.
impl<C: Coefficient> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render(&Names::Indexed))
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let p = super::parse::parse_indexed(&text).map_err(serde::de::Error::custom)?;
        Ok(Poly::from_terms(p.terms().map(|(w, c)| (w.clone(), C::from_laurent(c)))))
    }
}

impl<C: Coefficient> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&Names::Indexed))
    }
}

impl<C: Coefficient> AddAssign<Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: Poly<C>) {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl<C: Coefficient> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<C: Coefficient> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += rhs;
        self
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }
}

impl<C: Coefficient> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

/// Ring-tagged polynomial for callers that pick the ring at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyPoly {
    Z2(Z2Poly),
    Laurent(LaurentPoly),
}

impl AnyPoly {
    pub fn ring(&self) -> Ring {
        match self {
            AnyPoly::Z2(_) => Ring::Z2,
            AnyPoly::Laurent(_) => Ring::LaurentZ,
        }
    }

    fn mismatch(&self, other: &AnyPoly) -> Error {
        Error::RingMismatch { left: self.ring().name(), right: other.ring().name() }
    }

    pub fn try_add(&self, other: &AnyPoly) -> Result<AnyPoly> {
        match (self, other) {
            (AnyPoly::Z2(a), AnyPoly::Z2(b)) => Ok(AnyPoly::Z2(a + b)),
            (AnyPoly::Laurent(a), AnyPoly::Laurent(b)) => Ok(AnyPoly::Laurent(a + b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_mul(&self, other: &AnyPoly) -> Result<AnyPoly> {
        match (self, other) {
            (AnyPoly::Z2(a), AnyPoly::Z2(b)) => Ok(AnyPoly::Z2(a * b)),
            (AnyPoly::Laurent(a), AnyPoly::Laurent(b)) => Ok(AnyPoly::Laurent(a * b)),
            _ => Err(self.mismatch(other)),
        }
    }
}

impl fmt::Display for AnyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPoly::Z2(p) => write!(f, "{p}"),
            AnyPoly::Laurent(p) => write!(f, "{p}"),
        }
    }
}
