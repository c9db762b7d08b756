//! Mixed-dimension extension: the dimension-binder and dimension-splitter
//! generators and their rule set.
//!
//! The binder reindexes a pair of wires of dimensions `s`, `t` as a single
//! wire of dimension `s*t`; under big-endian mixed-radix ordering both
//! converters interpret as identity matrices, and wires of dimension 1 are
//! ordinary wires that merely render as empty.

use crate::derived::{black_codot, black_dot};
use crate::diagram::Diagram;
use crate::error::Result;
use crate::interpret::{generator_matrix, Interpreter};
use crate::matrix::{Comparison, ComplexMatrix};
use crate::phase::PhaseVector;
use crate::rules::{
    check_instance, Assignment, ParamKind, ParamSpec, RewriteRule, RuleKind, RulePair,
    VERIFY_ENTRY_LIMIT,
};

/// `[[binder]] = sum |k*t+l><k,l|`: an `st x st` identity under the chosen
/// basis ordering.
pub fn binder_matrix(s: usize, t: usize) -> ComplexMatrix {
    generator_matrix(&crate::diagram::Generator::Binder { s, t })
}

/// `[[splitter]] = sum |floor(k/t)>|k - t*floor(k/t)><k|`: the exact inverse
/// of the binder.
pub fn splitter_matrix(s: usize, t: usize) -> ComplexMatrix {
    generator_matrix(&crate::diagram::Generator::Splitter { s, t })
}

const fn dim_param(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Size { lo: 1, hi: 4 },
    }
}

fn st(a: &Assignment) -> Result<(usize, usize)> {
    Ok((a.size("s")?, a.size("t")?))
}

/// binder then splitter is the identity pair of wires.
fn binder_unitary_1(_d: usize, a: &Assignment) -> Result<RulePair> {
    let (s, t) = st(a)?;
    Ok(RulePair {
        lhs: Diagram::column([Diagram::binder(s, t)?, Diagram::splitter(s, t)?])?,
        rhs: Diagram::par(Diagram::identity(s)?, Diagram::identity(t)?),
    })
}

/// splitter then binder is the identity on the bound wire.
fn binder_unitary_2(_d: usize, a: &Assignment) -> Result<RulePair> {
    let (s, t) = st(a)?;
    Ok(RulePair {
        lhs: Diagram::column([Diagram::splitter(s, t)?, Diagram::binder(s, t)?])?,
        rhs: Diagram::identity(s * t)?,
    })
}

/// Binding three wires associates.
fn binder_assoc(_d: usize, a: &Assignment) -> Result<RulePair> {
    let (s, t) = st(a)?;
    let u = a.size("u")?;
    let lhs = Diagram::column([
        Diagram::par(Diagram::binder(s, t)?, Diagram::identity(u)?),
        Diagram::binder(s * t, u)?,
    ])?;
    let rhs = Diagram::column([
        Diagram::par(Diagram::identity(s)?, Diagram::binder(t, u)?),
        Diagram::binder(s, t * u)?,
    ])?;
    Ok(RulePair { lhs, rhs })
}

/// A pair of plain spiders bound together is the spider at the bound
/// dimension: `binder . (Z_s x Z_t) = Z_{st} . binder` (split form).
fn binder_wspider(_d: usize, a: &Assignment) -> Result<RulePair> {
    let (s, t) = st(a)?;
    let lhs = Diagram::column([
        Diagram::par(Diagram::z_plain(1, 2, s)?, Diagram::z_plain(1, 2, t)?),
        Diagram::row([
            Diagram::identity(s)?,
            Diagram::swap_mixed(s, t)?,
            Diagram::identity(t)?,
        ]),
        Diagram::row([Diagram::binder(s, t)?, Diagram::binder(s, t)?]),
    ])?;
    let rhs = Diagram::column([Diagram::binder(s, t)?, Diagram::z_plain(1, 2, s * t)?])?;
    Ok(RulePair { lhs, rhs })
}

/// Binding with a trailing 1-wire is the plain wire (1-wires are drawn
/// empty, so the two sides differ only by invisible padding).
fn binder_with1_right(_d: usize, a: &Assignment) -> Result<RulePair> {
    let s = a.size("s")?;
    Ok(RulePair {
        lhs: Diagram::binder(s, 1)?,
        rhs: Diagram::par(Diagram::identity(s)?, Diagram::identity(1)?),
    })
}

fn binder_with1_left(_d: usize, a: &Assignment) -> Result<RulePair> {
    let t = a.size("t")?;
    Ok(RulePair {
        lhs: Diagram::binder(1, t)?,
        rhs: Diagram::par(Diagram::identity(1)?, Diagram::identity(t)?),
    })
}

/// The six binder/splitter rules. Their parameters are the wire dimensions
/// themselves; the `d` argument of the builders is ignored.
pub fn qufinite_catalog() -> Vec<RewriteRule> {
    use RuleKind::Qufinite;
    let rule = |name, params, build| RewriteRule {
        name,
        kind: Qufinite,
        group: "binder",
        params,
        build,
    };
    vec![
        rule(
            "binder_unitary_1",
            vec![dim_param("s"), dim_param("t")],
            binder_unitary_1,
        ),
        rule(
            "binder_unitary_2",
            vec![dim_param("s"), dim_param("t")],
            binder_unitary_2,
        ),
        rule(
            "binder_assoc",
            vec![dim_param("s"), dim_param("t"), dim_param("u")],
            binder_assoc,
        ),
        rule(
            "binder_wspider",
            vec![dim_param("s"), dim_param("t")],
            binder_wspider,
        ),
        rule(
            "binder_with1_right",
            vec![dim_param("s")],
            binder_with1_right,
        ),
        rule("binder_with1_left", vec![dim_param("t")], binder_with1_left),
    ]
}

/// Exhaustively check one qufinite rule over a grid of wire dimensions.
/// Returns `(assignment, comparison)` per grid point.
pub fn verify_grid(
    rule: &RewriteRule,
    grid: &[usize],
    tol: f64,
) -> Result<Vec<(Assignment, Comparison)>> {
    let size_names: Vec<&'static str> = rule
        .params
        .iter()
        .filter(|p| matches!(p.kind, ParamKind::Size { .. }))
        .map(|p| p.name)
        .collect();
    let mut interp = Interpreter::with_limit(VERIFY_ENTRY_LIMIT);
    let mut results = Vec::new();
    let combos = grid.len().pow(size_names.len() as u32);
    for combo in 0..combos {
        let mut assignment = Assignment::new();
        let mut rest = combo;
        for name in &size_names {
            assignment = assignment.with_size(name, grid[rest % grid.len()]);
            rest /= grid.len();
        }
        let cmp = check_instance(rule, 2, &assignment, tol, &mut interp)?;
        results.push((assignment, cmp));
    }
    Ok(results)
}

/// A mixed-dimension smoke diagram: phase spiders of two different wire
/// dimensions feeding a binder. Used to pin the shape bookkeeping.
pub fn mixed_example(s: usize, t: usize, ps: PhaseVector, pt: PhaseVector) -> Result<Diagram> {
    Diagram::column([
        Diagram::par(Diagram::z_spider(1, 1, ps)?, Diagram::z_spider(1, 1, pt)?),
        Diagram::binder(s, t)?,
    ])
}

/// `|0><0|` built from the black dot and codot; handy in mixed tests.
pub fn zero_projector(d: usize) -> Result<Diagram> {
    Diagram::column([black_codot(d)?, black_dot(d)?])
}
