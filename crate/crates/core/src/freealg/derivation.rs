use super::coeff::{Coefficient, Ring};
use super::poly::Poly;
use super::word::{Gen, Word};
use crate::error::{Error, Result};

/// A derivation of the free algebra, extended from its values on generators
/// by the graded Leibniz rule `D(xy) = D(x) y + (-1)^{|x|} x D(y)`.
/// Over Z/2 the signs are irrelevant and gradings are not needed.
#[derive(Clone, Debug)]
pub struct Derivation<C: Coefficient> {
    values: Vec<Poly<C>>,
    /// Parity of each generator's grading (signed mode only).
    odd: Option<Vec<bool>>,
}

/// Build the derivation with `D(x_i) = values[i - 1]`. `gradings` is
/// required over Z[t,t^-1]; `modulus` is the period of the gradings
/// (0 for integer gradings) and must be even for signs to make sense.
pub fn leibniz_extend<C: Coefficient>(
    values: Vec<Poly<C>>,
    gradings: Option<&[i64]>,
    modulus: u32,
) -> Result<Derivation<C>> {
    let odd = match (C::RING, gradings) {
        (Ring::Z2, _) => None,
        (Ring::LaurentZ, None) => {
            return Err(Error::MissingGrading(Gen::from_index(0)));
        }
        (Ring::LaurentZ, Some(gr)) => {
            if modulus % 2 == 1 {
                return Err(Error::OddGradingModulus(modulus));
            }
            if gr.len() < values.len() {
                return Err(Error::MissingGrading(Gen::from_index(gr.len())));
            }
            Some(gr.iter().map(|d| d.rem_euclid(2) == 1).collect())
        }
    };
    Ok(Derivation { values, odd })
}

impl<C: Coefficient> Derivation<C> {
    pub fn value(&self, g: Gen) -> Option<&Poly<C>> {
        self.values.get(g.index())
    }

    fn is_odd(&self, g: Gen) -> bool {
        self.odd.as_ref().is_some_and(|o| o[g.index()])
    }

    /// Parity of a word's grading.
    pub fn word_is_odd(&self, w: &Word) -> bool {
        w.letters().iter().filter(|&&g| self.is_odd(g)).count() % 2 == 1
    }

    pub fn apply_word(&self, w: &Word) -> Poly<C> {
        let letters = w.letters();
        let mut out = Poly::zero();
        let mut negative = false;
        for (i, &g) in letters.iter().enumerate() {
            let dg = &self.values[g.index()];
            if !dg.is_zero() {
                let left = Word::from_slice(&letters[..i]);
                let right = Word::from_slice(&letters[i + 1..]);
                let mut term = dg.sandwich(&left, &right);
                if negative {
                    term = -&term;
                }
                out += term;
            }
            if self.is_odd(g) {
                negative = !negative;
            }
        }
        out
    }

    pub fn apply(&self, p: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            out += self.apply_word(w).scale(c);
        }
        out
    }
}
