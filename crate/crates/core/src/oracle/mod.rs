//! Ground-truth engine for multilinear polynomial identities.
//!
//! For a set of multilinear identities and a degree `n`, the oracle builds
//! the span of all degree-`n` multilinear consequences (every identity with
//! monomials substituted into its slots, placed inside every monomial
//! context), row-reduces it exactly, and answers dimension, membership,
//! canonical-reduction and invariant-subspace queries against it.

mod basis;
mod generate;
mod index;
mod invariant;

pub use basis::{
    consequence_basis, dim_multilinear, is_consequence, row_reduce, ColumnRanking, ConsequenceBasis,
    QuotientCoordinates,
};
pub use generate::generate_consequences;
pub use index::TermIndexer;
pub use invariant::{invariant_basis, invariant_basis_of};

use std::fmt;

use crate::error::{Error, Result};
use crate::parse::parse_slot_poly;
use crate::poly::Polynomial;
use crate::term::{Signature, Term};

/// A multilinear identity `body = 0` in the slots `x1..xk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    arity: usize,
    signature: Option<Signature>,
    body: Polynomial,
}

impl Identity {
    pub fn new(body: Polynomial) -> Result<Self> {
        if body.is_zero() {
            return Err(Error::Identity("identity body is zero".into()));
        }
        let arity = body.max_degree();
        let mut signature = None;
        for t in body.terms() {
            if t.degree() != arity || !t.is_multilinear() {
                return Err(Error::Identity(format!(
                    "term {t} does not use each of the {arity} slots exactly once"
                )));
            }
            match (signature, t.signature()?) {
                (_, None) => {}
                (None, Some(s)) => signature = Some(s),
                (Some(a), Some(b)) if a != b => return Err(Error::MixedSignature { offset: 0 }),
                _ => {}
            }
        }
        Ok(Identity {
            arity,
            signature,
            body,
        })
    }

    /// Parse one identity written over the slot letters `a..h`.
    pub fn parse(text: &str) -> Result<Self> {
        let (body, _) = parse_slot_poly(text)?;
        Identity::new(body)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn signature(&self) -> Option<Signature> {
        self.signature
    }

    /// The body, with slot `i` written as `x_i`.
    pub fn body(&self) -> &Polynomial {
        &self.body
    }

    /// Substitute `args[i-1]` for slot `i`, expanding multilinearly.
    pub fn instantiate(&self, args: &[Polynomial]) -> Polynomial {
        assert_eq!(args.len(), self.arity);
        self.body.map_linear(|t| substitute(t, args))
    }
}

fn substitute(t: &Term, args: &[Polynomial]) -> Polynomial {
    match t {
        Term::Leaf(g) => args[g.index() as usize - 1].clone(),
        Term::Node(op, l, r) => Polynomial::product(*op, &substitute(l, args), &substitute(r, args)),
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.body.to_string();
        let mut out = String::with_capacity(letters.len());
        let bytes = letters.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b'x' && i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                let d = bytes[i + 1] - b'1';
                out.push((b'a' + d) as char);
                i += 2;
            } else {
                out.push(bytes[i] as char);
                i += 1;
            }
        }
        write!(f, "{out}")
    }
}

/// A named set of identities sharing one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySet {
    name: String,
    signature: Signature,
    identities: Vec<Identity>,
}

const LEFT_COMMUTATIVE: &str = "(a*(b*c)) - (b*(a*c))";
const RIGHT_SYMMETRIC: &str = "((a*b)*c) - (a*(b*c)) - ((a*c)*b) + (a*(c*b))";
const METABELIAN: &str = "((a*b)*(c*d))";
const LIE_ADMISSIBLE: &str = "((a*b)*c) - ((b*a)*c) - (c*(a*b)) + (c*(b*a)) + ((b*c)*a) - ((c*b)*a) \
     - (a*(b*c)) + (a*(c*b)) + ((c*a)*b) - ((a*c)*b) - (b*(c*a)) + (b*(a*c))";

const ANTICOMMUTATIVE: &str = "[a,b] + [b,a]";
const COMMUTATIVE: &str = "{a,b} - {b,a}";
const JACOBI: &str = "[[a,b],c] + [[b,c],a] + [[c,a],b]";
const POLARIZED_METABELIAN: [&str; 6] = [
    "[[a,b],[c,d]]",
    "[[a,b],{c,d}]",
    "[{a,b},{c,d}]",
    "{{a,b},{c,d}}",
    "{{a,b},[c,d]}",
    "{[a,b],[c,d]}",
];

impl IdentitySet {
    pub fn new(name: impl Into<String>, signature: Signature, identities: Vec<Identity>) -> Result<Self> {
        for id in &identities {
            if let Some(s) = id.signature {
                if s != signature {
                    return Err(Error::Identity(format!(
                        "identity {id} is over {} but the set is over {}",
                        s.name(),
                        signature.name()
                    )));
                }
            }
        }
        Ok(IdentitySet {
            name: name.into(),
            signature,
            identities,
        })
    }

    fn from_texts(name: &str, signature: Signature, texts: &[&str]) -> Self {
        let ids = texts
            .iter()
            .map(|t| Identity::parse(t).expect("built-in identity parses"))
            .collect();
        IdentitySet::new(name, signature, ids).expect("built-in identity set is consistent")
    }

    /// Right Novikov: left commutativity and right symmetry.
    pub fn novikov() -> Self {
        IdentitySet::from_texts("novikov", Signature::Star, &[LEFT_COMMUTATIVE, RIGHT_SYMMETRIC])
    }

    /// Metabelian right Novikov.
    pub fn mnov() -> Self {
        IdentitySet::from_texts("mnov", Signature::Star, &[LEFT_COMMUTATIVE, RIGHT_SYMMETRIC, METABELIAN])
    }

    /// Lie-admissible, as a one-product variety.
    pub fn lieadm() -> Self {
        IdentitySet::from_texts("lieadm", Signature::Star, &[LIE_ADMISSIBLE])
    }

    /// Metabelian Lie-admissible, as a one-product variety.
    pub fn mlieadm() -> Self {
        IdentitySet::from_texts("mlieadm", Signature::Star, &[LIE_ADMISSIBLE, METABELIAN])
    }

    /// Metabelian Lie-admissible in the commutator/anticommutator signature.
    pub fn mlieadm_polarized() -> Self {
        let mut texts = vec![ANTICOMMUTATIVE, COMMUTATIVE, JACOBI];
        texts.extend(POLARIZED_METABELIAN);
        IdentitySet::from_texts("mlieadm-polarized", Signature::Polarized, &texts)
    }

    /// Lie-admissible in the commutator/anticommutator signature.
    pub fn lieadm_polarized() -> Self {
        IdentitySet::from_texts("lieadm-polarized", Signature::Polarized, &[ANTICOMMUTATIVE, COMMUTATIVE, JACOBI])
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "novikov" => Ok(IdentitySet::novikov()),
            "mnov" => Ok(IdentitySet::mnov()),
            "lieadm" => Ok(IdentitySet::lieadm()),
            "mlieadm" => Ok(IdentitySet::mlieadm()),
            "mlieadm-polarized" => Ok(IdentitySet::mlieadm_polarized()),
            "lieadm-polarized" => Ok(IdentitySet::lieadm_polarized()),
            other => Err(Error::UnknownVariety(other.to_string())),
        }
    }

    /// Parse an identity file: one identity per line over the letters
    /// `a..h`, `#` starts a comment line. The signature is inferred; an
    /// empty file defaults to `{*}`.
    pub fn parse_file(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut identities = Vec::new();
        let mut signature = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let id = Identity::parse(line).map_err(|e| match e {
                Error::Syntax { offset, message } => Error::Syntax {
                    offset,
                    message: format!("line {}: {message}", lineno + 1),
                },
                other => other,
            })?;
            match (signature, id.signature) {
                (None, s) => signature = s,
                (Some(a), Some(b)) if a != b => {
                    return Err(Error::Identity(format!(
                        "line {}: signature differs from earlier lines",
                        lineno + 1
                    )))
                }
                _ => {}
            }
            identities.push(id);
        }
        IdentitySet::new(name, signature.unwrap_or(Signature::Star), identities)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn identities(&self) -> &[Identity] {
        &self.identities
    }

    pub fn max_arity(&self) -> usize {
        self.identities.iter().map(Identity::arity).max().unwrap_or(0)
    }

    /// A copy with extra identities appended.
    pub fn with(&self, name: &str, more: &[Identity]) -> Result<Self> {
        let mut ids = self.identities.clone();
        ids.extend(more.iter().cloned());
        IdentitySet::new(name, self.signature, ids)
    }
}
