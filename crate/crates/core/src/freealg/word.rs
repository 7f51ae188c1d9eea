use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// A generator of a free algebra, identified by its 1-based label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Gen(pub u16);

impl Gen {
    pub fn new(label: usize) -> Self {
        assert!(label >= 1 && label <= u16::MAX as usize, "generator label {label} out of range");
        Gen(label as u16)
    }

    pub fn label(self) -> usize {
        self.0 as usize
    }

    /// Zero-based position, for indexing per-generator tables.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_index(i: usize) -> Self {
        Gen::new(i + 1)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x_{}", self.0)
    }
}

/// A monomial of the free algebra. The empty word is the unit.
///
/// Words are totally ordered degree-lexicographically: longer words are
/// larger, and words of equal length compare letter by letter from the
/// left, higher generator labels being larger.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(SmallVec<[Gen; 8]>);

impl Word {
    pub fn one() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(g: Gen) -> Self {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn from_slice(letters: &[Gen]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn from_labels(labels: &[usize]) -> Self {
        Word(labels.iter().map(|&l| Gen::new(l)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v: SmallVec<[Gen; 8]> = SmallVec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`
    pub fn sandwich(&self, left: &[Gen], right: &[Gen]) -> Word {
        let mut v: SmallVec<[Gen; 8]> = SmallVec::with_capacity(left.len() + self.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(right);
        Word(v)
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.0.contains(&g)
    }

    /// First position at which `pat` occurs as a contiguous subword.
    pub fn find(&self, pat: &[Gen]) -> Option<usize> {
        if pat.is_empty() {
            return Some(0);
        }
        if pat.len() > self.len() {
            return None;
        }
        self.0.windows(pat.len()).position(|w| w == pat)
    }
}

impl Borrow<[Gen]> for Word {
    fn borrow(&self) -> &[Gen] {
        &self.0
    }
}

impl FromIterator<Gen> for Word {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Names::Indexed.word(self))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Names::Indexed.word(self))
    }
}

/// How generators are printed and parsed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Names {
    /// `x_1, x_2, ...`
    #[default]
    Indexed,
    /// Explicit names; generator `i` is `names[i - 1]`.
    Custom(Vec<String>),
}

impl Names {
    pub fn custom<S: AsRef<str>>(names: &[S]) -> Self {
        Names::Custom(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn name(&self, g: Gen) -> String {
        match self {
            Names::Indexed => format!("x_{}", g.0),
            Names::Custom(v) => v.get(g.index()).cloned().unwrap_or_else(|| format!("x_{}", g.0)),
        }
    }

    pub fn lookup(&self, name: &str) -> Option<Gen> {
        match self {
            Names::Indexed => None,
            Names::Custom(v) => v.iter().position(|n| n == name).map(Gen::from_index),
        }
    }

    pub fn word(&self, w: &Word) -> String {
        if w.is_one() {
            return "1".to_string();
        }
        let parts: Vec<String> = w.letters().iter().map(|&g| self.name(g)).collect();
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let a = Word::from_labels(&[28]);
        let b = Word::from_labels(&[2]);
        assert!(a > b);
        assert!(Word::from_labels(&[1, 1]) > Word::from_labels(&[40]));
        assert!(Word::from_labels(&[3, 1]) > Word::from_labels(&[2, 9]));
        assert!(Word::one() < Word::from_labels(&[1]));
    }

    #[test]
    fn subword_search() {
        let w = Word::from_labels(&[12, 11, 2, 13]);
        assert_eq!(w.find(Word::from_labels(&[11, 2]).letters()), Some(1));
        assert_eq!(w.find(Word::from_labels(&[2, 11]).letters()), None);
        assert_eq!(w.find(&[]), Some(0));
    }

    #[test]
    fn rendering() {
        assert_eq!(Word::from_labels(&[3, 2]).to_string(), "x_3 x_2");
        assert_eq!(Word::one().to_string(), "1");
        let n = Names::custom(&["a", "b"]);
        assert_eq!(n.word(&Word::from_labels(&[2, 1])), "b a");
        assert_eq!(n.lookup("b"), Some(Gen(2)));
    }
}
