//! Words in the generators of a presented groupoid.
//!
//! Letters are stored in *path order*: `letters[0]` is traversed first. When a
//! word is evaluated in a group or groupoid, images therefore multiply in
//! reverse, `F(e_m) * ... * F(e_1)`, matching the usual composition order.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A signed generator occurrence.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(gen: usize) -> Letter {
        Letter { gen, sign: Sign::Pos }
    }

    pub fn neg(gen: usize) -> Letter {
        Letter { gen, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, sign: self.sign.flip() }
    }
}

/// A composable word with recorded endpoints.
///
/// Endpoints are carried explicitly so the empty word (an identity arrow) still
/// knows its object.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    pub src: usize,
    pub dst: usize,
    pub letters: Vec<Letter>,
}

impl Word {
    /// The identity word at an object.
    pub fn identity(obj: usize) -> Word {
        Word { src: obj, dst: obj, letters: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Free reduction: cancel adjacent `g g^{-1}` pairs until none remain.
    /// Idempotent; endpoints are unchanged.
    pub fn reduced(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top.gen == l.gen && top.sign != l.sign => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word { src: self.src, dst: self.dst, letters: stack }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters
            .windows(2)
            .all(|w| !(w[0].gen == w[1].gen && w[0].sign != w[1].sign))
    }

    /// The reverse path, with all signs flipped.
    pub fn inverse(&self) -> Word {
        Word {
            src: self.dst,
            dst: self.src,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self` followed by `then`; panics if the endpoints do not chain.
    /// Use [`crate::groupoid::PresentedGroupoid::word`] for checked building.
    pub fn then(&self, then: &Word) -> Word {
        assert_eq!(self.dst, then.src, "words do not compose");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&then.letters);
        Word { src: self.src, dst: then.dst, letters }
    }

    /// Number of occurrences of a generator, either sign.
    pub fn occurrences(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels_adjacent_inverse_pairs() {
        // g g^{-1} at an object reduces to the identity word.
        let w = Word { src: 0, dst: 0, letters: vec![Letter::pos(3), Letter::neg(3)] };
        assert_eq!(w.reduced(), Word::identity(0));

        // g g^{-1} g reduces to g.
        let w = Word {
            src: 0,
            dst: 1,
            letters: vec![Letter::pos(3), Letter::neg(3), Letter::pos(3)],
        };
        assert_eq!(w.reduced().letters, vec![Letter::pos(3)]);
    }

    #[test]
    fn reduction_is_idempotent() {
        let w = Word {
            src: 0,
            dst: 1,
            letters: vec![
                Letter::pos(0),
                Letter::pos(1),
                Letter::neg(1),
                Letter::neg(0),
                Letter::pos(2),
            ],
        };
        let r = w.reduced();
        assert_eq!(r.reduced(), r);
        assert!(r.is_reduced());
    }

    #[test]
    fn no_cancellation_leaves_word_unchanged() {
        let w = Word { src: 0, dst: 2, letters: vec![Letter::pos(0), Letter::pos(1)] };
        assert_eq!(w.reduced(), w);
    }

    #[test]
    fn inverse_reverses_and_flips() {
        let w = Word { src: 0, dst: 2, letters: vec![Letter::pos(0), Letter::neg(1)] };
        let inv = w.inverse();
        assert_eq!(inv.src, 2);
        assert_eq!(inv.dst, 0);
        assert_eq!(inv.letters, vec![Letter::pos(1), Letter::neg(0)]);
        assert_eq!(w.then(&inv).reduced(), Word::identity(0));
    }
}
