//! Generator-wise translations between the ZX and ZW calculi.
//!
//! Both directions are homomorphic in `seq` and `par` and act only on
//! leaves. The common generators (Z spider, identity, swap, cap, cup) map
//! to themselves; the images of the remaining generators are fixed diagram
//! gadgets whose interpretations reproduce the source generator exactly,
//! which is what [`check_preservation`] verifies.

use std::fmt;

use crate::derived::{black_dot, down_w, inverse_dim_scalar};
use crate::diagram::{Diagram, Generator, Node};
use crate::error::{Error, Result};
use crate::interpret::Interpreter;
use crate::matrix::approx_equal;
use crate::phase::PhaseVector;
use crate::rules::VERIFY_ENTRY_LIMIT;

/// Translation direction: `Xw` sends ZX diagrams into the ZW calculus,
/// `Wx` sends ZW diagrams into the ZX calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Xw,
    Wx,
}

impl Direction {
    pub fn parse(text: &str) -> Option<Direction> {
        match text {
            "xw" => Some(Direction::Xw),
            "wx" => Some(Direction::Wx),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Xw => write!(f, "xw"),
            Direction::Wx => write!(f, "wx"),
        }
    }
}

/// Translate a ZX diagram into the ZW calculus.
pub fn to_zw(diagram: &Diagram) -> Result<Diagram> {
    map_leaves(diagram, &zx_leaf_to_zw)
}

/// Translate a ZW diagram into the ZX calculus.
pub fn to_zx(diagram: &Diagram) -> Result<Diagram> {
    map_leaves(diagram, &zw_leaf_to_zx)
}

pub fn translate(diagram: &Diagram, direction: Direction) -> Result<Diagram> {
    match direction {
        Direction::Xw => to_zw(diagram),
        Direction::Wx => to_zx(diagram),
    }
}

fn map_leaves(d: &Diagram, f: &impl Fn(&Generator) -> Result<Diagram>) -> Result<Diagram> {
    match d.node() {
        Node::Empty => Ok(Diagram::empty()),
        Node::Leaf(gen) => f(gen),
        Node::Seq(a, b) => Diagram::seq(map_leaves(a, f)?, map_leaves(b, f)?),
        Node::Par(a, b) => Ok(Diagram::par(map_leaves(a, f)?, map_leaves(b, f)?)),
    }
}

fn common_leaf(gen: &Generator) -> Option<Result<Diagram>> {
    gen.is_common().then(|| Diagram::generator(gen.clone()))
}

fn zx_leaf_to_zw(gen: &Generator) -> Result<Diagram> {
    if let Some(common) = common_leaf(gen) {
        return common;
    }
    match gen {
        Generator::Hadamard { dim } => hadamard_in_zw(*dim, false),
        Generator::HadamardDagger { dim } => hadamard_in_zw(*dim, true),
        Generator::Triangle { dim } => triangle_in_zw(*dim, PhaseVector::ones(*dim)),
        Generator::TriangleInv { dim } => triangle_in_zw(*dim, PhaseVector::minus_ones(*dim)),
        other => Err(Error::ForeignGenerator {
            name: other.name(),
            calculus: "zx",
        }),
    }
}

fn zw_leaf_to_zx(gen: &Generator) -> Result<Diagram> {
    if let Some(common) = common_leaf(gen) {
        return common;
    }
    match gen {
        Generator::W { dim } => w_in_zx(*dim),
        Generator::Braid { dim } => braid_in_zx(*dim, false),
        Generator::BraidInv { dim } => braid_in_zx(*dim, true),
        other => Err(Error::ForeignGenerator {
            name: other.name(),
            calculus: "zw",
        }),
    }
}

// ---------------------------------------------------------------------------
// ZX generators as ZW diagrams

/// `sum xi^{jk} |j><k|` in ZW: feed a plain unit through the braid alongside
/// the input wire, then discard the crossed-over wire with the plain counit.
fn hadamard_in_zw(d: usize, inverse: bool) -> Result<Diagram> {
    let braid = if inverse {
        Diagram::braid_inv(d)?
    } else {
        Diagram::braid(d)?
    };
    Diagram::column([
        Diagram::par(Diagram::z_plain(0, 1, d)?, Diagram::identity(d)?),
        braid,
        Diagram::par(Diagram::z_plain(1, 0, d)?, Diagram::identity(d)?),
    ])
}

/// Triangle in ZW: split with W, collapse one branch to `|0> sum_j <j|`
/// (with `unit_phase` weighting the sum), merge with the bent W. The plain
/// phase gives `I + sum |0><i|`, the `(-1,...,-1)` phase its inverse.
fn triangle_in_zw(d: usize, unit_phase: PhaseVector) -> Result<Diagram> {
    let collapse = Diagram::column([Diagram::z_spider(1, 0, unit_phase)?, black_dot(d)?])?;
    Diagram::column([
        Diagram::w(d)?,
        Diagram::par(collapse, Diagram::identity(d)?),
        down_w(d)?,
    ])
}

// ---------------------------------------------------------------------------
// ZW generators as ZX diagrams

/// `sum |j1 - j2 mod d><j1 j2|`: Hadamard-conjugated plain spider with a
/// `1/d` loop. The mixed conjugation (dagger on the left leg only) makes the
/// congruence come out as a difference.
fn subtractor_in_zx(d: usize) -> Result<Diagram> {
    let core = Diagram::column([
        Diagram::par(Diagram::hadamard_dagger(d)?, Diagram::hadamard(d)?),
        Diagram::z_plain(2, 1, d)?,
        Diagram::hadamard(d)?,
    ])?;
    Ok(Diagram::par(inverse_dim_scalar(d)?, core))
}

/// `sum |j1 + j2 mod d><j1 j2|`.
fn adder_in_zx(d: usize) -> Result<Diagram> {
    let core = Diagram::column([
        Diagram::par(Diagram::hadamard_dagger(d)?, Diagram::hadamard_dagger(d)?),
        Diagram::z_plain(2, 1, d)?,
        Diagram::hadamard(d)?,
    ])?;
    Ok(Diagram::par(inverse_dim_scalar(d)?, core))
}

/// W node in ZX: copy the input, offset one copy through the triangle, copy
/// again and subtract. `|x>` becomes `|0 x> + |x 0>` for nonzero `x` and
/// `|00>` at zero.
fn w_in_zx(d: usize) -> Result<Diagram> {
    Diagram::column([
        Diagram::z_plain(1, 2, d)?,
        Diagram::par(Diagram::identity(d)?, Diagram::triangle(d)?),
        Diagram::par(Diagram::identity(d)?, Diagram::z_plain(1, 2, d)?),
        Diagram::par(subtractor_in_zx(d)?, Diagram::identity(d)?),
    ])
}

/// Controlled phase `sum xi^{jk} |jk><jk|`: an adder-based controlled shift
/// conjugated by Hadamards on the target, with a `1/d` loop.
fn controlled_phase_in_zx(d: usize, inverse: bool) -> Result<Diagram> {
    let (inner, outer) = if inverse {
        (Diagram::hadamard(d)?, Diagram::hadamard_dagger(d)?)
    } else {
        (Diagram::hadamard_dagger(d)?, Diagram::hadamard(d)?)
    };
    let controlled_shift = Diagram::column([
        Diagram::par(Diagram::z_plain(1, 2, d)?, Diagram::identity(d)?),
        Diagram::par(Diagram::identity(d)?, adder_in_zx(d)?),
    ])?;
    let core = Diagram::column([
        Diagram::par(Diagram::identity(d)?, inner),
        controlled_shift,
        Diagram::par(Diagram::identity(d)?, outer),
    ])?;
    Ok(Diagram::par(inverse_dim_scalar(d)?, core))
}

/// Braid in ZX: swap followed by the controlled phase.
fn braid_in_zx(d: usize, inverse: bool) -> Result<Diagram> {
    Diagram::column([Diagram::swap(d)?, controlled_phase_in_zx(d, inverse)?])
}

// ---------------------------------------------------------------------------
// checks

/// Outcome of a preservation or round-trip check.
#[derive(Debug, Clone)]
pub struct TranslationReport {
    pub semantic_pass: bool,
    pub max_deviation: f64,
    pub detail: Option<String>,
}

/// Interpret `diagram` and its translation and compare entrywise.
pub fn check_preservation(
    diagram: &Diagram,
    direction: Direction,
    tol: f64,
) -> Result<TranslationReport> {
    let translated = translate(diagram, direction)?;
    let mut interp = Interpreter::with_limit(VERIFY_ENTRY_LIMIT);
    let original = interp.interpret(diagram)?;
    let image = interp.interpret(&translated)?;
    let cmp = approx_equal(&original, &image, tol);
    Ok(TranslationReport {
        semantic_pass: cmp.pass,
        max_deviation: cmp.max_deviation,
        detail: cmp.reason,
    })
}

/// Result of sending a ZX diagram through ZW and back.
#[derive(Debug, Clone)]
pub struct RoundTripReport {
    pub semantic_pass: bool,
    pub max_deviation: f64,
    /// Whether the round trip returned the identical term (modulo
    /// associativity and empty units). Holds for the common generators and
    /// Z spiders; the other generators come back only semantically equal.
    pub structural_pass: bool,
}

/// `to_zx(to_zw(D))` compared against `D`, both semantically and
/// structurally.
pub fn round_trip_zx(diagram: &Diagram, tol: f64) -> Result<RoundTripReport> {
    let returned = to_zx(&to_zw(diagram)?)?;
    let mut interp = Interpreter::with_limit(VERIFY_ENTRY_LIMIT);
    let original = interp.interpret(diagram)?;
    let back = interp.interpret(&returned)?;
    let cmp = approx_equal(&original, &back, tol);
    Ok(RoundTripReport {
        semantic_pass: cmp.pass,
        max_deviation: cmp.max_deviation,
        structural_pass: returned.equal_structural(diagram),
    })
}

/// Every ZX generator at dimension `d`, with the given spider phase.
pub fn zx_generators(d: usize, spider_phase: &PhaseVector) -> Result<Vec<Diagram>> {
    Ok(vec![
        Diagram::z_spider(2, 1, spider_phase.clone())?,
        Diagram::z_spider(1, 2, spider_phase.clone())?,
        Diagram::hadamard(d)?,
        Diagram::hadamard_dagger(d)?,
        Diagram::triangle(d)?,
        Diagram::triangle_inv(d)?,
        Diagram::identity(d)?,
        Diagram::swap(d)?,
        Diagram::cap(d)?,
        Diagram::cup(d)?,
        Diagram::empty(),
    ])
}

/// Every ZW generator at dimension `d`, with the given spider phase.
pub fn zw_generators(d: usize, spider_phase: &PhaseVector) -> Result<Vec<Diagram>> {
    Ok(vec![
        Diagram::z_spider(2, 1, spider_phase.clone())?,
        Diagram::z_spider(1, 2, spider_phase.clone())?,
        Diagram::w(d)?,
        Diagram::braid(d)?,
        Diagram::braid_inv(d)?,
        Diagram::identity(d)?,
        Diagram::swap(d)?,
        Diagram::cap(d)?,
        Diagram::cup(d)?,
        Diagram::empty(),
    ])
}
