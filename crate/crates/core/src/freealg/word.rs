use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A monomial of the free algebra: a finite sequence of generator indices.
///
/// The empty word is the unit. Words order degree-lexicographically: shorter
/// words first, then lexicographically by generator index.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u16; 8]>);

impl Word {
    pub fn unit() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(index: usize) -> Self {
        Word(SmallVec::from_slice(&[letter_u16(index)]))
    }

    pub fn from_letters(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&l| letter_u16(l)).collect())
    }

    pub(crate) fn from_raw(letters: &[u16]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = SmallVec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self · middle · right` in one allocation.
    pub fn sandwich(&self, middle: &Word, right: &Word) -> Word {
        let mut v = SmallVec::with_capacity(self.0.len() + middle.0.len() + right.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word::from_raw(&self.0[..len])
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word::from_raw(&self.0[start..])
    }

    /// Exponent vector over `generator_count` generators.
    pub fn multidegree(&self, generator_count: usize) -> Result<MultiDegree> {
        let mut e = vec![0u32; generator_count];
        for &l in &self.0 {
            let l = l as usize;
            if l >= generator_count {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    count: generator_count,
                });
            }
            e[l] += 1;
        }
        Ok(MultiDegree(e))
    }

    /// One past the largest letter, or 0 for the unit.
    pub fn width(&self) -> usize {
        self.0.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Renders with the given generator names, letters joined by `*`.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&l| generator_name(names, l as usize))
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn letter_u16(index: usize) -> u16 {
    u16::try_from(index).expect("generator index exceeds u16 range")
}

/// Name of generator `i`: from `names` when provided, else `x{i+1}`.
pub fn generator_name(names: &[String], i: usize) -> String {
    names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1))
}

/// Default names `x1, x2, ...`.
pub fn default_names(count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("x{i}")).collect()
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

/// Per-generator exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiDegree(exponents)
    }

    pub fn zero(generator_count: usize) -> Self {
        MultiDegree(vec![0; generator_count])
    }

    /// The multilinear degree `(1, ..., 1)`.
    pub fn multilinear(generator_count: usize) -> Self {
        MultiDegree(vec![1; generator_count])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn generator_count(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Entrywise `<=`; missing trailing entries count as zero.
    pub fn le(&self, other: &MultiDegree) -> bool {
        let n = self.0.len().max(other.0.len());
        (0..n).all(|i| self.get(i) <= other.get(i))
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        let n = self.0.len().max(other.0.len());
        MultiDegree((0..n).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// `self - other` if `other <= self`.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        if !other.le(self) {
            return None;
        }
        let n = self.0.len().max(other.0.len());
        Some(MultiDegree((0..n).map(|i| self.get(i) - other.get(i)).collect()))
    }

    /// Same vector padded or trimmed (only zeros may be trimmed) to `count`.
    pub fn resized(&self, count: usize) -> Option<MultiDegree> {
        if self.0.iter().skip(count).any(|&e| e != 0) {
            return None;
        }
        Some(MultiDegree((0..count).map(|i| self.get(i)).collect()))
    }

    /// Every multidegree over `generator_count` generators with total at most
    /// `max_total`, in lexicographic order of exponent vectors.
    pub fn all_up_to(generator_count: usize, max_total: u32) -> Vec<MultiDegree> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
            if i == cur.len() {
                out.push(MultiDegree(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        rec(0, max_total, &mut vec![0; generator_count], &mut out);
        out
    }

    /// Number of words with this multidegree.
    pub fn multinomial(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut n: u128 = 0;
        for &e in &self.0 {
            for k in 1..=e as u128 {
                n += 1;
                acc = acc * n / k;
            }
        }
        acc
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All words of multidegree `mu`, ascending.
pub fn words_of_multidegree(mu: &MultiDegree) -> Vec<Word> {
    fn rec(left: &mut [u32], cur: &mut Vec<u16>, out: &mut Vec<Word>) {
        if left.iter().all(|&e| e == 0) {
            out.push(Word::from_raw(cur));
            return;
        }
        for g in 0..left.len() {
            if left[g] > 0 {
                left[g] -= 1;
                cur.push(g as u16);
                rec(left, cur, out);
                cur.pop();
                left[g] += 1;
            }
        }
    }
    let mut left = mu.exponents().to_vec();
    let mut out = Vec::with_capacity(mu.multinomial().min(1 << 20) as usize);
    rec(&mut left, &mut Vec::new(), &mut out);
    out
}

/// All nonunit words whose multidegree is `<= budget`, ascending.
pub fn nonunit_words_within(budget: &MultiDegree) -> Vec<Word> {
    fn rec(left: &mut [u32], cur: &mut Vec<u16>, out: &mut Vec<Word>) {
        if !cur.is_empty() {
            out.push(Word::from_raw(cur));
        }
        for g in 0..left.len() {
            if left[g] > 0 {
                left[g] -= 1;
                cur.push(g as u16);
                rec(left, cur, out);
                cur.pop();
                left[g] += 1;
            }
        }
    }
    let mut left = budget.exponents().to_vec();
    let mut out = Vec::new();
    rec(&mut left, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let mut v = [
            Word::from_letters(&[1, 0]),
            Word::letter(1),
            Word::unit(),
            Word::from_letters(&[0, 1]),
            Word::letter(0),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["1", "x1", "x2", "x1*x2", "x2*x1"]);
    }

    #[test]
    fn multidegrees() {
        let w = Word::from_letters(&[0, 1, 0]);
        assert_eq!(w.multidegree(2).unwrap(), MultiDegree::new(vec![2, 1]));
        assert_eq!(Word::unit().multidegree(2).unwrap(), MultiDegree::new(vec![0, 0]));
        assert_eq!(
            Word::from_letters(&[1, 1]).multidegree(3).unwrap(),
            MultiDegree::new(vec![0, 2, 0])
        );
        assert!(w.multidegree(1).is_err());
    }

    #[test]
    fn words_of_a_component() {
        let ws = words_of_multidegree(&MultiDegree::new(vec![1, 1]));
        assert_eq!(ws, vec![Word::from_letters(&[0, 1]), Word::from_letters(&[1, 0])]);
        assert_eq!(words_of_multidegree(&MultiDegree::new(vec![1, 1, 1])).len(), 6);
        assert_eq!(MultiDegree::new(vec![3, 2, 2]).multinomial(), 210);
    }

    #[test]
    fn bounded_words() {
        let ws = nonunit_words_within(&MultiDegree::new(vec![1, 1]));
        assert_eq!(ws.len(), 4);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }
}
