use std::fmt;

use crate::error::InvariantViolation;

/// A LexBFS label: the digits `n - i` appended in the iterations `i` at which
/// a visited neighbor was numbered.
///
/// Ordering is lexicographic with a proper prefix smaller than its
/// extensions, which is exactly the derived `Ord` of the digit vector.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LexLabel {
    digits: Vec<usize>,
}

impl LexLabel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Appends `digit`, which must be smaller than every digit so far.
    pub fn push(&mut self, digit: usize) -> Result<(), InvariantViolation> {
        if let Some(&last) = self.digits.last() {
            if digit >= last {
                return Err(InvariantViolation(format!(
                    "label {self:?} extended by non-decreasing digit {digit}"
                )));
            }
        }
        self.digits.push(digit);
        Ok(())
    }

    /// `self ∘ digit` as a new label.
    pub fn extended(&self, digit: usize) -> Result<Self, InvariantViolation> {
        let mut label = self.clone();
        label.push(digit)?;
        Ok(label)
    }

    pub fn is_strictly_descending(&self) -> bool {
        self.digits.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Debug for LexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("\"")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("\"")
    }
}
