use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coeff::Scalar;
use crate::error::Result;
use crate::freealg::{default_names, MultiDegree, Poly, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Member,
    NonMember,
    /// `k * target` is a member and `k` is minimal.
    Torsion(BigInt),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Member => write!(f, "Member"),
            Verdict::NonMember => write!(f, "NonMember"),
            Verdict::Torsion(k) => write!(f, "Torsion({k})"),
        }
    }
}

/// One term `coeff * left * generators[generator] * right` of a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTerm {
    pub coeff: Scalar,
    pub left: Word,
    pub generator: usize,
    pub right: Word,
}

/// Evidence for a negative answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankData {
    pub component_dim: usize,
    /// Rank of the ideal in the component (rank of the lattice over the
    /// integers).
    pub ideal_rank: usize,
    /// Rank after adjoining the target.
    pub with_target_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub verdict: Verdict,
    pub component: Option<MultiDegree>,
    /// Generators referenced by the witness terms.
    pub generators: Vec<Poly>,
    /// Expands to the target (Member) or to `k * target` (Torsion).
    pub witness: Vec<WitnessTerm>,
    pub rank: Option<RankData>,
    /// Over the integers: the smallest `k` with `k * target` in the lattice,
    /// when one exists.
    pub torsion_index: Option<BigInt>,
}

impl MembershipCertificate {
    pub fn is_member(&self) -> bool {
        match &self.verdict {
            Verdict::Member => true,
            Verdict::Torsion(k) => *k == BigInt::from(1),
            Verdict::NonMember => false,
        }
    }

    /// Sum of the witness terms.
    pub fn expand(&self, target: &Poly) -> Result<Poly> {
        let mut acc = Poly::zero(target.ring());
        for t in &self.witness {
            let term = self.generators[t.generator]
                .bordered(&t.left, &t.right)
                .scale(&t.coeff)?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Re-expands the witness and compares it with the target, or with
    /// `k * target` for a torsion verdict. Negative verdicts carry no witness
    /// and verify trivially.
    pub fn verify(&self, target: &Poly) -> bool {
        let expected = match &self.verdict {
            Verdict::NonMember => return self.witness.is_empty(),
            Verdict::Member => target.clone(),
            Verdict::Torsion(k) => match target.scale(&target.ring().from_bigint(k)) {
                Ok(p) => p,
                Err(_) => return false,
            },
        };
        self.expand(target).is_ok_and(|p| p == expected)
    }
}

impl Serialize for WitnessTerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // (coeff, a, generator-index, b)
        (
            self.coeff.to_string(),
            self.left.render(&[]),
            self.generator,
            self.right.render(&[]),
        )
            .serialize(s)
    }
}

impl Serialize for MembershipCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let width = self.generators.iter().map(|g| g.width()).max().unwrap_or(0);
        let names = default_names(width);
        let mut st = s.serialize_struct("MembershipCertificate", 7)?;
        st.serialize_field("verdict", &self.verdict.to_string())?;
        st.serialize_field("component", &self.component.as_ref().map(|m| m.exponents().to_vec()))?;
        st.serialize_field(
            "generators",
            &self.generators.iter().map(|g| g.render(&names)).collect::<Vec<_>>(),
        )?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion_index", &self.torsion_index.as_ref().map(|k| k.to_string()))?;
        st.end()
    }
}
