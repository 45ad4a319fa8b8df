//! Cross-validation suites shared by the `verify` command and the test
//! targets. Each check compares a structured computation against the oracle
//! or against another independent route.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::diffcom::{diff_dims, diff_rank, embed, metabelian_reduce};
use crate::enumerate::{for_each_multilinear, for_each_term_over, Limits};
use crate::error::{Error, Result};
use crate::mlieadm::{
    depolarize, mla_basis, mla_basis_multilinear, mla_component, mla_dims, mla_mul, mla_nf, mla_nf_term,
    mla_sym_generators, sequence_label, TreeMonomial,
};
use crate::mnov::{nov_basis, nov_basis_multilinear, nov_dims, nov_lemma_suite, nov_mul, nov_nf, nov_nf_term, nov_sym_generators};
use crate::oracle::{
    consequence_basis, invariant_basis, invariant_basis_of, ColumnRanking, ConsequenceBasis, IdentitySet,
};
use crate::poly::{apply_permutation, Permutation, Polynomial};
use crate::term::{OpSymbol, Signature, Term};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    fn equal<T: PartialEq + std::fmt::Debug>(name: impl Into<String>, left: T, right: T) -> Self {
        let pass = left == right;
        let detail = if pass {
            format!("{left:?} = {right:?}")
        } else {
            format!("{left:?} != {right:?}")
        };
        Check::new(name, pass, detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Basis,
    Table,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Basis => "basis",
            Suite::Table => "table",
            Suite::All => "all",
        }
    }
}

/// Counts mismatches while visiting cases and keeps the first few.
struct Tally {
    cases: usize,
    failures: usize,
    first: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: 0,
            first: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.len() < 3 {
                self.first.push(describe());
            }
        }
    }

    fn finish(self, name: impl Into<String>) -> Check {
        if self.failures == 0 {
            Check::new(name, true, format!("{} cases", self.cases))
        } else {
            Check::new(
                name,
                false,
                format!("{} of {} cases failed, e.g. {}", self.failures, self.cases, self.first.join("; ")),
            )
        }
    }
}

fn terms_poly(terms: impl IntoIterator<Item = Term>) -> Vec<Polynomial> {
    terms.into_iter().map(Polynomial::from_term).collect()
}

fn action_generators(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    if n >= 2 {
        out.push(Permutation::transposition(n, 1, 2));
    }
    if n >= 3 {
        out.push(Permutation::long_cycle(n));
    }
    out
}

/// Ordered pairs of disjoint label sets covering `1..=total`, the first of
/// size `a`.
fn splits(total: usize, a: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let all: Vec<u32> = (1..=total as u32).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << total {
        if mask.count_ones() as usize != a {
            continue;
        }
        let (l, r): (Vec<u32>, Vec<u32>) = all.iter().partition(|&&i| mask >> (i - 1) & 1 == 1);
        out.push((l, r));
    }
    out
}

/// Argument tuples for identity instances: basis monomials over two
/// letters with degrees summing to at most `max_total`.
fn argument_tuples<M: Clone>(arity: usize, max_total: usize, basis: impl Fn(usize) -> Vec<M>) -> Vec<Vec<M>> {
    let mut out = Vec::new();
    let mut degrees = vec![1usize; arity];
    loop {
        if degrees.iter().sum::<usize>() <= max_total {
            let pools: Vec<Vec<M>> = degrees.iter().map(|&d| basis(d)).collect();
            let mut idx = vec![0usize; arity];
            'tuples: loop {
                out.push(idx.iter().zip(&pools).map(|(&i, p)| p[i].clone()).collect());
                for k in (0..arity).rev() {
                    idx[k] += 1;
                    if idx[k] < pools[k].len() {
                        continue 'tuples;
                    }
                    idx[k] = 0;
                }
                break;
            }
        }
        let mut k = arity;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            degrees[k] += 1;
            if degrees.iter().sum::<usize>() <= max_total {
                break;
            }
            degrees[k] = 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Metabelian Novikov

/// The seven vanishing degree-5 expressions under both normal forms.
pub fn nov_lemma_checks() -> Result<Vec<Check>> {
    let report = nov_lemma_suite();
    let nonzero: Vec<String> = report
        .entries
        .iter()
        .filter(|(_, nf)| !nf.is_zero())
        .map(|(t, nf)| format!("{t} -> {nf}"))
        .collect();
    let mut diff_nonzero = Vec::new();
    for (t, _) in &report.entries {
        let r = metabelian_reduce(&embed(t)?)?;
        if !r.is_zero() {
            diff_nonzero.push(format!("{t} -> {r}"));
        }
    }
    Ok(vec![
        Check::new(
            "vanishing expressions under nov_nf",
            nonzero.is_empty(),
            if nonzero.is_empty() {
                format!("{} zeros", report.entries.len())
            } else {
                nonzero.join("; ")
            },
        ),
        Check::new(
            "vanishing expressions under the differential model",
            diff_nonzero.is_empty(),
            if diff_nonzero.is_empty() {
                format!("{} zeros", report.entries.len())
            } else {
                diff_nonzero.join("; ")
            },
        ),
    ])
}

/// Defining identities of the variety vanish on basis-monomial arguments.
pub fn nov_identity_checks(max_total: usize) -> Result<Vec<Check>> {
    let ids = IdentitySet::mnov();
    let mut out = Vec::new();
    for id in ids.identities() {
        let mut tally = Tally::new();
        let tuples = argument_tuples(id.arity(), max_total, |d| nov_basis(d, 2));
        for args in tuples {
            let polys: Vec<Polynomial> = args.iter().map(|m| Polynomial::from_term(m.to_term())).collect();
            let inst = id.instantiate(&polys);
            let nf = nov_nf(&inst)?;
            tally.record(nf.is_zero(), || format!("{inst} -> {nf}"));
        }
        out.push(tally.finish(format!("identity {id} vanishes up to degree {max_total}")));
    }
    Ok(out)
}

fn nov_targeted(n: usize, limits: &Limits) -> Result<ConsequenceBasis> {
    let preferred: Vec<Term> = nov_basis_multilinear(n).iter().map(|m| m.to_term()).collect();
    consequence_basis(&IdentitySet::mnov(), n, &ColumnRanking::Targeted(preferred), limits)
}

/// Dimension agreement of the three routes at degree `n`.
pub fn nov_dimension_checks(n: usize, limits: &Limits) -> Result<Vec<Check>> {
    let basis = nov_dims(n);
    let oracle = crate::oracle::dim_multilinear(&IdentitySet::mnov(), n, limits)?;
    let diff = diff_dims(n);
    Ok(vec![
        Check::equal(format!("basis = oracle at degree {n}"), basis, oracle),
        Check::equal(format!("basis = differential model at degree {n}"), basis, diff),
    ])
}

/// Exhaustive comparison of nov_nf with the oracle at degree `n`.
pub fn nov_oracle_checks(n: usize, limits: &Limits) -> Result<Vec<Check>> {
    let cb = nov_targeted(n, limits)?;
    let preferred: BTreeSet<Term> = nov_basis_multilinear(n).iter().map(|m| m.to_term()).collect();
    let free: BTreeSet<Term> = cb.free_terms().into_iter().collect();
    let mut agree = Tally::new();
    let mut sound = Tally::new();
    let mut support = Tally::new();
    let mut err = None;
    for_each_multilinear(Signature::Star, n, |t| {
        if err.is_some() {
            return;
        }
        let mut run = || -> Result<()> {
            let p = Polynomial::from_term(t.clone());
            let nf = nov_nf_term(&t)?.to_polynomial();
            let reduced = cb.reduce(&p)?;
            agree.record(reduced == nf, || format!("{t}: nf {nf}, oracle {reduced}"));
            sound.record(cb.is_consequence(&(&nf - &p))?, || format!("{t} -> {nf}"));
            support.record(nf.terms().all(|m| preferred.contains(m)), || format!("{t} -> {nf}"));
            Ok(())
        };
        if let Err(e) = run() {
            err = Some(e);
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(vec![
        Check::new(
            format!("quotient basis is the structured basis at degree {n}"),
            free == preferred,
            format!("{} free columns, {} basis monomials", free.len(), preferred.len()),
        ),
        agree.finish(format!("nov_nf = oracle reduce at degree {n}")),
        sound.finish(format!("nov_nf(t) - t is a consequence at degree {n}")),
        support.finish(format!("nov_nf supported on the basis at degree {n}")),
    ])
}

/// Kernel agreement between nov_nf and the differential model at degree `n`,
/// and independence of the embedded basis.
pub fn nov_diffcom_checks(n: usize) -> Result<Vec<Check>> {
    let mut kernel = Tally::new();
    let mut err = None;
    for_each_multilinear(Signature::Star, n, |t| {
        if err.is_some() {
            return;
        }
        let mut run = || -> Result<()> {
            if nov_nf_term(&t)?.is_zero() {
                let r = metabelian_reduce(&embed(&t)?)?;
                kernel.record(r.is_zero(), || format!("{t} -> {r}"));
            }
            Ok(())
        };
        if let Err(e) = run() {
            err = Some(e);
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let images = nov_basis_multilinear(n)
        .iter()
        .map(|m| metabelian_reduce(&embed(&m.to_term())?))
        .collect::<Result<Vec<_>>>()?;
    Ok(vec![
        kernel.finish(format!("nov_nf kernel vanishes in the differential model at degree {n}")),
        Check::equal(
            format!("embedded basis is independent at degree {n}"),
            diff_rank(&images),
            images.len(),
        ),
    ])
}

/// Table products against normal forms of raw products, for all multilinear
/// factor pairs of combined degree `total`.
pub fn nov_table_checks(total: usize) -> Result<Vec<Check>> {
    let mut tally = Tally::new();
    for a in 1..total {
        for (left, right) in splits(total, a) {
            let mut us = Vec::new();
            for_each_term_over(Signature::Star, &left, |t| us.push(t));
            let mut vs = Vec::new();
            for_each_term_over(Signature::Star, &right, |t| vs.push(t));
            let vnf = vs.iter().map(nov_nf_term).collect::<Result<Vec<_>>>()?;
            for u in &us {
                let unf = nov_nf_term(u)?;
                for (v, vn) in vs.iter().zip(&vnf) {
                    let table = nov_mul(&unf, vn);
                    let raw = nov_nf_term(&Term::star(u.clone(), v.clone()))?;
                    tally.record(table == raw, || format!("{u} * {v}: table {table}, nf {raw}"));
                }
            }
        }
    }
    Ok(vec![tally.finish(format!("nov_mul = nov_nf of raw products at combined degree {total}"))])
}

/// Symmetry of the generators and, within the oracle cap, spanning of the
/// invariant subspace.
pub fn nov_sym_checks(n: usize, limits: &Limits) -> Result<Vec<Check>> {
    let gens = nov_sym_generators(n);
    let mut out = Vec::new();
    for g in &gens {
        let base = nov_nf(&g.poly)?;
        let mut ok = !base.is_zero();
        for sigma in action_generators(n) {
            ok &= nov_nf(&apply_permutation(&g.poly, &sigma)?)? == base;
        }
        out.push(Check::new(
            format!("{} is symmetric and nonzero", g.label),
            ok,
            format!("{} terms, normal form {} terms", g.poly.len(), base.len()),
        ));
    }
    if limits.check_oracle(n).is_ok() {
        let ids = IdentitySet::mnov();
        let cb = consequence_basis(&ids, n, &ColumnRanking::Default, limits)?;
        let family: Vec<Polynomial> = terms_poly(cb.free_terms());
        let inv = invariant_basis_of(&cb, &family)?;
        let polys: Vec<Polynomial> = gens.iter().map(|g| g.poly.clone()).collect();
        let span = cb.coordinatizer(&polys)?.span_dim();
        let inside = cb.coordinatizer(&inv)?;
        let mut contained = true;
        for p in &polys {
            contained &= inside.express(&cb, p)?.is_some();
        }
        out.push(Check::new(
            format!("generators span the invariants at degree {n}"),
            contained && span == inv.len(),
            format!("invariant dimension {}, generator span {span}, contained {contained}", inv.len()),
        ));
    }
    Ok(out)
}

/// The selected suite for the metabelian Novikov variety at degree `n`.
pub fn nov_suite(suite: Suite, n: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        checks.extend(nov_lemma_checks()?);
        checks.extend(nov_identity_checks(n.max(4))?);
    }
    if matches!(suite, Suite::Basis | Suite::All) {
        limits.check_oracle(n)?;
        checks.extend(nov_dimension_checks(n, limits)?);
        checks.extend(nov_oracle_checks(n, limits)?);
    }
    if matches!(suite, Suite::Table | Suite::All) && n >= 2 {
        checks.extend(nov_table_checks(n)?);
    }
    if suite == Suite::All {
        checks.extend(nov_diffcom_checks(n)?);
        checks.extend(nov_sym_checks(n, limits)?);
    }
    Ok(SuiteReport {
        suite: suite.name().into(),
        checks,
    })
}

// ---------------------------------------------------------------------------
// Metabelian Lie-admissible

fn mla_targeted(n: usize, limits: &Limits) -> Result<ConsequenceBasis> {
    let preferred: Vec<Term> = mla_basis_multilinear(n).iter().map(|m| m.to_term()).collect();
    consequence_basis(
        &IdentitySet::mlieadm_polarized(),
        n,
        &ColumnRanking::Targeted(preferred),
        limits,
    )
}

/// Defining identities of the polarized presentation vanish under mla_nf
/// on basis-monomial arguments.
pub fn mla_identity_checks(max_total: usize) -> Result<Vec<Check>> {
    let ids = IdentitySet::mlieadm_polarized();
    let mut out = Vec::new();
    for id in ids.identities() {
        let mut tally = Tally::new();
        for args in argument_tuples(id.arity(), max_total, |d| mla_basis(d, 2)) {
            let polys: Vec<Polynomial> = args.iter().map(|m| Polynomial::from_term(m.to_term())).collect();
            let inst = id.instantiate(&polys);
            let nf = mla_nf(&inst)?;
            tally.record(nf.is_zero(), || format!("{inst} -> {nf}"));
        }
        out.push(tally.finish(format!("identity {id} vanishes up to degree {max_total}")));
    }
    Ok(out)
}

/// Dimension agreement between counting and both oracle presentations.
pub fn mla_dimension_checks(n: usize, limits: &Limits) -> Result<Vec<Check>> {
    let basis = mla_dims(n) as usize;
    let star = crate::oracle::dim_multilinear(&IdentitySet::mlieadm(), n, limits)?;
    let polar = crate::oracle::dim_multilinear(&IdentitySet::mlieadm_polarized(), n, limits)?;
    Ok(vec![
        Check::equal(format!("basis = oracle at degree {n}"), basis, star),
        Check::equal(format!("basis = polarized oracle at degree {n}"), basis, polar),
    ])
}

/// Depolarized basis images are independent modulo the consequences.
pub fn mla_independence_check(n: usize, limits: &Limits) -> Result<Check> {
    let cb = consequence_basis(&IdentitySet::mlieadm(), n, &ColumnRanking::Default, limits)?;
    let images = mla_basis_multilinear(n)
        .iter()
        .map(|m| depolarize(&Polynomial::from_term(m.to_term())))
        .collect::<Result<Vec<_>>>()?;
    let coords = cb.coordinatizer(&images)?;
    Ok(Check::new(
        format!("depolarized basis is independent at degree {n}"),
        coords.independent(),
        format!("rank {} of {}", coords.span_dim(), images.len()),
    ))
}

/// Exhaustive comparison of mla_nf with the polarized oracle at degree `n`,
/// plus soundness through the depolarized presentation.
pub fn mla_oracle_checks(n: usize, limits: &Limits) -> Result<Vec<Check>> {
    let cb = mla_targeted(n, limits)?;
    let star = consequence_basis(&IdentitySet::mlieadm(), n, &ColumnRanking::Default, limits)?;
    let preferred: BTreeSet<Term> = mla_basis_multilinear(n).iter().map(|m| m.to_term()).collect();
    let free: BTreeSet<Term> = cb.free_terms().into_iter().collect();
    let mut agree = Tally::new();
    let mut sound = Tally::new();
    let mut support = Tally::new();
    let mut err = None;
    for_each_multilinear(Signature::Polarized, n, |t| {
        if err.is_some() {
            return;
        }
        let mut run = || -> Result<()> {
            let p = Polynomial::from_term(t.clone());
            let nf = mla_nf(&p)?;
            let reduced = cb.reduce(&p)?;
            agree.record(reduced == nf, || format!("{t}: nf {nf}, oracle {reduced}"));
            let diff = depolarize(&(&nf - &p))?;
            sound.record(star.is_consequence(&diff)?, || format!("{t} -> {nf}"));
            support.record(nf.terms().all(|m| preferred.contains(m)), || format!("{t} -> {nf}"));
            Ok(())
        };
        if let Err(e) = run() {
            err = Some(e);
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(vec![
        Check::new(
            format!("quotient basis is the structured basis at degree {n}"),
            free == preferred,
            format!("{} free columns, {} basis monomials", free.len(), preferred.len()),
        ),
        agree.finish(format!("mla_nf = polarized oracle reduce at degree {n}")),
        sound.finish(format!("depolarized mla_nf(t) - t is a consequence at degree {n}")),
        support.finish(format!("mla_nf supported on the basis at degree {n}")),
    ])
}

/// Transpositions keep every basis monomial inside its type-sequence
/// component.
pub fn mla_component_check(n: usize) -> Result<Check> {
    let mut tally = Tally::new();
    let transpositions: Vec<Permutation> = (1..n)
        .flat_map(|i| (i + 1..=n).map(move |j| Permutation::transposition(n, i as u32, j as u32)))
        .collect();
    for m in mla_basis_multilinear(n) {
        let p = Polynomial::from_term(m.to_term());
        for sigma in &transpositions {
            let image = mla_nf(&apply_permutation(&p, sigma)?)?;
            let same = image
                .terms()
                .all(|t| TreeMonomial::from_term(t).is_some_and(|x| x.ops() == m.ops()));
            tally.record(same, || format!("{m} under {sigma:?} -> {image}"));
        }
    }
    Ok(tally.finish(format!("transpositions preserve type sequences at degree {n}")))
}

/// Table products against normal forms of raw products, for all multilinear
/// factor pairs of combined degree `total` and both operations.
pub fn mla_table_checks(total: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for op in [OpSymbol::Bracket, OpSymbol::Brace] {
        let mut tally = Tally::new();
        for a in 1..total {
            for (left, right) in splits(total, a) {
                let mut us = Vec::new();
                for_each_term_over(Signature::Polarized, &left, |t| us.push(t));
                let mut vs = Vec::new();
                for_each_term_over(Signature::Polarized, &right, |t| vs.push(t));
                let vnf = vs.iter().map(mla_nf_term).collect::<Result<Vec<_>>>()?;
                for u in &us {
                    let unf = mla_nf_term(u)?;
                    for (v, vn) in vs.iter().zip(&vnf) {
                        let table = mla_mul(&unf, vn, op)?;
                        let raw = mla_nf_term(&Term::node(op, u.clone(), v.clone()))?;
                        tally.record(table == raw, || format!("{u} {} {v}: table {table}, nf {raw}", op.dot()));
                    }
                }
            }
        }
        out.push(tally.finish(format!(
            "mla_mul({}) = mla_nf of raw products at combined degree {total}",
            op.dot()
        )));
    }
    Ok(out)
}

/// The printed low-degree generators, term for term.
pub fn mla_example_checks() -> Result<Vec<Check>> {
    let expected = [
        ("p_(•,○,3)", "[x1,{x2,x3}] + [x2,{x1,x3}] + [x3,{x1,x2}]"),
        ("p_(○,•,3)", "{x1,[x2,x3]} + {x2,[x1,x3]} + {x3,[x1,x2]}"),
        ("p_(○,○,3)", "{x1,{x2,x3}} + {x2,{x1,x3}} + {x3,{x1,x2}}"),
        (
            "p_(•,•,○,4)",
            "[x2,[x1,{x3,x4}]] + [x3,[x1,{x2,x4}]] + [x4,[x1,{x2,x3}]] + [x3,[x2,{x1,x4}]] \
             + [x4,[x2,{x1,x3}]] + [x4,[x3,{x1,x2}]]",
        ),
    ];
    let mut out = Vec::new();
    for (label, text) in expected {
        let n = if label.ends_with("3)") { 3 } else { 4 };
        let want = crate::parse::parse_poly(text, Some(Signature::Polarized))?;
        let got = mla_sym_generators(n).into_iter().find(|g| g.label == label).map(|g| g.poly);
        out.push(Check::new(
            format!("{label} matches the printed sum"),
            got.as_ref() == Some(&want),
            match got {
                Some(p) => format!("{} terms", p.len()),
                None => "missing".into(),
            },
        ));
    }
    Ok(out)
}

/// Per-generator symmetry, per-component uniqueness and the total invariant
/// dimension `2^(n-1)` at degree `n >= 3`.
pub fn mla_sym_checks(n: usize, limits: &Limits) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let gens = mla_sym_generators(n);
    for g in &gens {
        let base = mla_nf(&g.poly)?;
        let mut ok = !base.is_zero();
        for sigma in action_generators(n) {
            ok &= mla_nf(&apply_permutation(&g.poly, &sigma)?)? == base;
        }
        out.push(Check::new(
            format!("{} is symmetric and nonzero", g.label),
            ok,
            format!("{} terms", g.poly.len()),
        ));
    }
    if n < 3 || limits.check_oracle(n).is_err() {
        return Ok(out);
    }
    let ids = IdentitySet::mlieadm_polarized();
    let cb = consequence_basis(&ids, n, &ColumnRanking::Default, limits)?;
    for g in &gens {
        let family = terms_poly(mla_component(&g.sequence).iter().map(|m| m.to_term()));
        let inv = invariant_basis_of(&cb, &family)?;
        let reduced = cb.reduce(&g.poly)?;
        let mut spanned = !reduced.is_zero();
        for sigma in action_generators(n) {
            spanned &= cb.reduce(&apply_permutation(&g.poly, &sigma)?)? == reduced;
        }
        out.push(Check::new(
            format!("{} spans a one-dimensional invariant space", sequence_label(&g.sequence)),
            inv.len() == 1 && spanned,
            format!("component invariant dimension {}, generator invariant {spanned}", inv.len()),
        ));
    }
    let total = invariant_basis(&ids, n, limits)?.len();
    out.push(Check::equal(
        format!("total invariant dimension at degree {n}"),
        total,
        1usize << (n - 1),
    ));
    Ok(out)
}

/// The selected suite for the metabelian Lie-admissible variety at degree
/// `n`.
pub fn mla_suite(suite: Suite, n: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        checks.extend(mla_identity_checks(n.max(4))?);
    }
    if matches!(suite, Suite::Basis | Suite::All) {
        limits.check_oracle(n)?;
        checks.extend(mla_dimension_checks(n, limits)?);
        checks.push(mla_independence_check(n, limits)?);
        checks.extend(mla_oracle_checks(n, limits)?);
        checks.push(mla_component_check(n)?);
    }
    if matches!(suite, Suite::Table | Suite::All) && n >= 2 {
        checks.extend(mla_table_checks(n)?);
    }
    if suite == Suite::All {
        checks.extend(mla_example_checks()?);
        checks.extend(mla_sym_checks(n, limits)?);
    }
    Ok(SuiteReport {
        suite: suite.name().into(),
        checks,
    })
}

/// Suites exist only for the varieties with structured normal forms.
pub fn run_suite(variety: &str, suite: Suite, n: usize, limits: &Limits) -> Result<SuiteReport> {
    match variety {
        "mnov" => nov_suite(suite, n, limits),
        "mlieadm" => mla_suite(suite, n, limits),
        other => Err(Error::UnknownVariety(format!("{other} has no structured normal form"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_counts() {
        assert_eq!(splits(4, 1).len(), 4);
        assert_eq!(splits(5, 2).len(), 10);
        assert_eq!(splits(3, 2)[0], (vec![1, 2], vec![3]));
    }

    #[test]
    fn argument_tuple_degrees() {
        let t = argument_tuples(2, 3, |d| vec![d]);
        assert_eq!(t, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn small_suites_pass() {
        let limits = Limits::default();
        for suite in [Suite::Identities, Suite::Basis, Suite::Table] {
            let r = nov_suite(suite, 3, &limits).unwrap();
            assert!(r.passed(), "{r:?}");
            let r = mla_suite(suite, 3, &limits).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
