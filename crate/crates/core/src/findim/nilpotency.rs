use serde::Serialize;

use super::algebra::{Element, StructureAlgebra};
use super::subspace::{ideal_from_gens_findim, SubspaceBasis};
use crate::error::{Error, Result};

/// A nonzero bracket `[y1, ..., yn]` with the entries named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketWitness {
    pub labels: Vec<String>,
    pub entries: Vec<Element>,
    pub value: Element,
}

impl BracketWitness {
    pub fn render(&self, a: &StructureAlgebra) -> String {
        format!("[{}] = {}", self.labels.join(","), a.render(&self.value))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    LieNilpotent,
    NotLieNilpotent(BracketWitness),
}

impl Nilpotency {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self, Nilpotency::LieNilpotent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremVerdict {
    Decided(Nilpotency),
    Refused(String),
}

/// Result of the finite criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub verdict: TheoremVerdict,
    /// Number of bracket tuples covered (including those settled by a
    /// vanishing prefix).
    pub checked: u128,
    /// Set when the check ran although 3 is not invertible; the answer then
    /// only reports whether the criterion's brackets vanish.
    pub condition_only: bool,
}

impl TheoremCheck {
    pub fn nilpotency(&self) -> Option<&Nilpotency> {
        match &self.verdict {
            TheoremVerdict::Decided(n) => Some(n),
            TheoremVerdict::Refused(_) => None,
        }
    }
}

#[derive(Serialize)]
struct WitnessDoc {
    bracket: Vec<String>,
    value: String,
}

/// JSON form of a witness.
pub fn witness_json(a: &StructureAlgebra, w: &BracketWitness) -> serde_json::Value {
    serde_json::to_value(WitnessDoc {
        bracket: w.labels.clone(),
        value: a.render(&w.value),
    })
    .expect("plain data")
}

type Labeled = Vec<(String, Element)>;

/// The entries allowed in the criterion: the declared generators, then all
/// products `x*y` of two of them.
fn slot_values(a: &StructureAlgebra) -> Result<(Labeled, Labeled)> {
    let xs: Vec<(String, Element)> = a.generators().to_vec();
    let mut middle = xs.clone();
    for (n1, x) in &xs {
        for (n2, y) in &xs {
            middle.push((format!("{n1}*{n2}"), a.mul(x, y)?));
        }
    }
    Ok((xs, middle))
}

struct Search<'a> {
    a: &'a StructureAlgebra,
    /// `tables[0]`: generators, `tables[1]`: generators and their products.
    tables: [Vec<(String, Element)>; 2],
    slots: Vec<usize>,
    checked: u128,
    nonzero: Vec<BracketWitness>,
    stop_at_first: bool,
}

impl Search<'_> {
    fn leaves_below(&self, depth: usize) -> u128 {
        self.slots[depth..]
            .iter()
            .map(|&s| self.tables[s].len() as u128)
            .product()
    }

    /// Depth-first over tuples; a vanishing prefix settles every extension.
    fn run(&mut self, depth: usize, acc: &Element, path: &mut Vec<usize>) -> Result<bool> {
        if depth == self.slots.len() {
            self.checked += 1;
            if acc.is_zero() {
                return Ok(false);
            }
            let (labels, entries) = path
                .iter()
                .enumerate()
                .map(|(d, &i)| self.tables[self.slots[d]][i].clone())
                .unzip();
            self.nonzero.push(BracketWitness {
                labels,
                entries,
                value: acc.clone(),
            });
            return Ok(self.stop_at_first);
        }
        if depth >= 2 && acc.is_zero() {
            self.checked += self.leaves_below(depth);
            return Ok(false);
        }
        let table = self.slots[depth];
        for i in 0..self.tables[table].len() {
            let y = &self.tables[table][i].1;
            let next = if depth == 0 {
                y.clone()
            } else {
                self.a.commutator(acc, y)?
            };
            path.push(i);
            let stop = self.run(depth + 1, &next, path)?;
            path.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn search(a: &StructureAlgebra, n: usize, stop_at_first: bool) -> Result<Search<'_>> {
    let (xs, middle) = slot_values(a)?;
    let mut slots = vec![0];
    slots.extend(std::iter::repeat_n(1, n - 2));
    slots.push(0);
    let mut s = Search {
        a,
        tables: [xs, middle],
        slots,
        checked: 0,
        nonzero: Vec::new(),
        stop_at_first,
    };
    let zero = Element::zero(a.ring(), a.dim());
    s.run(0, &zero, &mut Vec::new())?;
    Ok(s)
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

/// The finite criterion: `A` is Lie nilpotent of class at most `n-1` iff
/// every `[y1, ..., yn]` vanishes, with `y1, yn` generators and middle
/// entries generators or products of two generators. Refused unless 3 is
/// invertible in the ring and the declared generators generate `A`.
pub fn verify_via_theorem(a: &StructureAlgebra, n: usize) -> Result<TheoremCheck> {
    theorem_check(a, n, false)
}

/// As [`verify_via_theorem`], but runs over rings where 3 is not invertible
/// and marks the answer `condition_only`.
pub fn verify_via_theorem_forced(a: &StructureAlgebra, n: usize) -> Result<TheoremCheck> {
    theorem_check(a, n, true)
}

fn theorem_check(a: &StructureAlgebra, n: usize, force: bool) -> Result<TheoremCheck> {
    check_n(n)?;
    let refuse = |why: String| TheoremCheck {
        verdict: TheoremVerdict::Refused(why),
        checked: 0,
        condition_only: false,
    };
    let condition_only = !a.ring().three_invertible();
    if condition_only && !force {
        return Ok(refuse(format!("3 is not invertible in {}", a.ring())));
    }
    if !a.generated_by_declared() {
        return Ok(refuse("the declared generators do not generate the algebra".into()));
    }
    let s = search(a, n, true)?;
    let verdict = match s.nonzero.into_iter().next() {
        None => Nilpotency::LieNilpotent,
        Some(w) => Nilpotency::NotLieNilpotent(w),
    };
    Ok(TheoremCheck {
        verdict: TheoremVerdict::Decided(verdict),
        checked: s.checked,
        condition_only,
    })
}

/// Nonzero values of the criterion's brackets (the evaluated generating
/// family of `T^(n)`).
pub fn sn_values(a: &StructureAlgebra, n: usize) -> Result<Vec<Element>> {
    check_n(n)?;
    Ok(search(a, n, false)?.nonzero.into_iter().map(|w| w.value).collect())
}

/// Spans `M_1 = A`, `M_(k+1) = span [M_k, A]` up to `M_n`, each with the
/// basis-index tuples of its generating brackets.
fn lower_central(a: &StructureAlgebra, n: usize) -> Result<Vec<(Element, Vec<usize>)>> {
    let mut current: Vec<(Element, Vec<usize>)> = (0..a.dim()).map(|i| (a.basis(i), vec![i])).collect();
    for _ in 1..n {
        let mut next = SubspaceBasis::new(a.ring(), a.dim());
        let mut kept = Vec::new();
        for (m, idx) in &current {
            for j in 0..a.dim() {
                let v = a.commutator(m, &a.basis(j))?;
                if next.insert(&v) {
                    let mut t = idx.clone();
                    t.push(j);
                    kept.push((v, t));
                }
            }
        }
        current = kept;
        if current.is_empty() {
            break;
        }
    }
    Ok(current)
}

/// Brute-force answer from the lower central series of `A` as a Lie algebra.
pub fn lie_nilpotency_oracle(a: &StructureAlgebra, n: usize) -> Result<Nilpotency> {
    check_n(n)?;
    Ok(match lower_central(a, n)?.into_iter().next() {
        None => Nilpotency::LieNilpotent,
        Some((value, idx)) => Nilpotency::NotLieNilpotent(BracketWitness {
            labels: idx.iter().map(|&i| a.basis_names()[i].clone()).collect(),
            entries: idx.iter().map(|&i| a.basis(i)).collect(),
            value,
        }),
    })
}

/// `T^(n)(A)`: the ideal generated by all `n`-fold brackets.
pub fn tideal_findim(a: &StructureAlgebra, n: usize) -> Result<SubspaceBasis> {
    check_n(n)?;
    let gens: Vec<Element> = lower_central(a, n)?.into_iter().map(|g| g.0).collect();
    ideal_from_gens_findim(a, &gens)
}
