//! Catalog of ZW rewrite rules and derived equalities, with a randomized
//! numerical soundness verifier.
//!
//! Every rule is a pair of diagram builders over a dimension `d` and a set
//! of formal parameters (phase vectors and small size counts). Soundness is
//! checked by interpreting both sides and comparing entrywise; the verifier
//! doubles as the safety net for the diagram transcriptions.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::derived::{black_codot, black_dot, black_spider, down_w, Orientation};
use crate::diagram::{Diagram, WireSignature};
use crate::error::{Error, Result};
use crate::interpret::Interpreter;
use crate::matrix::approx_equal;
use crate::phase::PhaseVector;

/// Entry cap for verification runs. The bent W node expands to a five-wire
/// layer, which at d = 5 materialises a 3125 x 625 matrix; the public
/// default limit is too small for that, so the verifier runs with its own.
pub const VERIFY_ENTRY_LIMIT: usize = 8_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Rule,
    Lemma,
    Qufinite,
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleKind::Rule => write!(f, "rule"),
            RuleKind::Lemma => write!(f, "lemma"),
            RuleKind::Qufinite => write!(f, "qufinite"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum ParamKind {
    /// A phase vector drawn at the rule's dimension.
    Phase,
    /// A small size (leg count, wire dimension) drawn from `lo..=hi`.
    Size { lo: usize, hi: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
}

const fn phase(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Phase,
    }
}

const fn size(name: &'static str, lo: usize, hi: usize) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Size { lo, hi },
    }
}

/// A concrete choice of rule parameters.
#[derive(Debug, Clone, Default)]
pub struct Assignment {
    phases: Vec<(&'static str, PhaseVector)>,
    sizes: Vec<(&'static str, usize)>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn with_phase(mut self, name: &'static str, value: PhaseVector) -> Self {
        self.phases.push((name, value));
        self
    }

    pub fn with_size(mut self, name: &'static str, value: usize) -> Self {
        self.sizes.push((name, value));
        self
    }

    pub fn phase(&self, name: &'static str) -> Result<&PhaseVector> {
        self.phases
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
            .ok_or(Error::MissingParameter {
                rule: String::new(),
                name,
            })
    }

    pub fn size(&self, name: &'static str) -> Result<usize> {
        self.sizes
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
            .ok_or(Error::MissingParameter {
                rule: String::new(),
                name,
            })
    }

    /// Draw an assignment for `params` at dimension `d`. Phase entries have
    /// modulus in `[0.5, 1.5]` and uniform angle, keeping clear of the
    /// measure-zero degenerate boundary at 0.
    pub fn draw(rng: &mut impl Rng, params: &[ParamSpec], d: usize) -> Assignment {
        let mut out = Assignment::new();
        for spec in params {
            match spec.kind {
                ParamKind::Phase => {
                    let entries = (1..d)
                        .map(|_| {
                            let modulus = rng.random_range(0.5..1.5);
                            let angle = rng.random_range(0.0..std::f64::consts::TAU);
                            Complex64::from_polar(modulus, angle)
                        })
                        .collect();
                    out.phases.push((spec.name, PhaseVector::new(entries)));
                }
                ParamKind::Size { lo, hi } => {
                    out.sizes.push((spec.name, rng.random_range(lo..=hi)));
                }
            }
        }
        out
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, v) in &self.sizes {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{name}={v}")?;
            first = false;
        }
        for (name, p) in &self.phases {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{name}=[")?;
            for (i, z) in p.entries().iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}{:+}i", z.re, z.im)?;
            }
            write!(f, "]")?;
            first = false;
        }
        if first {
            write!(f, "-")?;
        }
        Ok(())
    }
}

pub struct RulePair {
    pub lhs: Diagram,
    pub rhs: Diagram,
}

pub type BuildFn = fn(usize, &Assignment) -> Result<RulePair>;

/// A named rewrite rule (or derived equality) with parameterised builders.
pub struct RewriteRule {
    pub name: &'static str,
    pub kind: RuleKind,
    /// Rule family, for report grouping: "braid", "w-node", "spider", ...
    pub group: &'static str,
    pub params: Vec<ParamSpec>,
    pub build: BuildFn,
}

impl RewriteRule {
    fn new(
        name: &'static str,
        kind: RuleKind,
        group: &'static str,
        params: Vec<ParamSpec>,
        build: BuildFn,
    ) -> Self {
        RewriteRule {
            name,
            kind,
            group,
            params,
            build,
        }
    }
}

/// Per-rule, per-dimension verification outcome.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub rule: String,
    pub kind: RuleKind,
    pub dimension: usize,
    pub trials: usize,
    /// The derived per-cell seed actually used.
    pub seed: u64,
    pub pass: bool,
    pub max_deviation: f64,
    /// First failing parameter assignment, or a builder/interpreter error.
    pub failure: Option<String>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} d={} trials={} max_dev={:.3e} seed={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.kind,
            self.rule,
            self.dimension,
            self.trials,
            self.max_deviation,
            self.seed
        )?;
        if let Some(failure) = &self.failure {
            write!(f, " [{failure}]")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// builder shorthands

fn id(d: usize) -> Result<Diagram> {
    Diagram::identity(d)
}

fn z(n: usize, m: usize, p: &PhaseVector) -> Result<Diagram> {
    Diagram::z_spider(n, m, p.clone())
}

fn z1(n: usize, m: usize, d: usize) -> Result<Diagram> {
    Diagram::z_plain(n, m, d)
}

fn pair(lhs: Diagram, rhs: Diagram) -> Result<RulePair> {
    Ok(RulePair { lhs, rhs })
}

fn col(parts: impl IntoIterator<Item = Diagram>) -> Result<Diagram> {
    Diagram::column(parts)
}

fn row(parts: impl IntoIterator<Item = Diagram>) -> Diagram {
    Diagram::row(parts)
}

// ---------------------------------------------------------------------------
// braid rules

/// tau then tau-inverse cancels.
fn bd1(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        col([Diagram::braid(d)?, Diagram::braid_inv(d)?])?,
        row([id(d)?, id(d)?]),
    )
}

/// tau-inverse then tau cancels.
fn bd2(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        col([Diagram::braid_inv(d)?, Diagram::braid(d)?])?,
        row([id(d)?, id(d)?]),
    )
}

/// Conjugating the braid by the symmetry gives it back.
fn bd3(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        col([Diagram::swap(d)?, Diagram::braid(d)?, Diagram::swap(d)?])?,
        Diagram::braid(d)?,
    )
}

fn yang_baxter(d: usize, braid: fn(usize) -> Result<Diagram>) -> Result<RulePair> {
    let left = col([
        row([braid(d)?, id(d)?]),
        row([id(d)?, braid(d)?]),
        row([braid(d)?, id(d)?]),
    ])?;
    let right = col([
        row([id(d)?, braid(d)?]),
        row([braid(d)?, id(d)?]),
        row([id(d)?, braid(d)?]),
    ])?;
    pair(left, right)
}

/// Third Reidemeister move for tau.
fn bd4(d: usize, _: &Assignment) -> Result<RulePair> {
    yang_baxter(d, Diagram::braid)
}

fn phase_slide(
    d: usize,
    a: &PhaseVector,
    braid: fn(usize) -> Result<Diagram>,
    spider_on_left: bool,
) -> Result<RulePair> {
    let spider = z(1, 1, a)?;
    let (top, bottom) = if spider_on_left {
        (row([spider.clone(), id(d)?]), row([id(d)?, spider.clone()]))
    } else {
        (row([id(d)?, spider.clone()]), row([spider.clone(), id(d)?]))
    };
    pair(col([top, braid(d)?])?, col([braid(d)?, bottom])?)
}

/// Phase spiders slide through the braid, left input to right output.
fn nat1(d: usize, a: &Assignment) -> Result<RulePair> {
    phase_slide(d, a.phase("a")?, Diagram::braid, true)
}

/// Phase spiders slide through the braid, right input to left output.
fn nat2(d: usize, a: &Assignment) -> Result<RulePair> {
    phase_slide(d, a.phase("a")?, Diagram::braid, false)
}

/// Same slide through the inverse braid.
fn nat3(d: usize, a: &Assignment) -> Result<RulePair> {
    phase_slide(d, a.phase("a")?, Diagram::braid_inv, true)
}

fn nat4(d: usize, a: &Assignment) -> Result<RulePair> {
    phase_slide(d, a.phase("a")?, Diagram::braid_inv, false)
}

/// A cap slides across the braid.
fn nat5(d: usize, _: &Assignment) -> Result<RulePair> {
    let left = col([
        row([id(d)?, Diagram::cap(d)?]),
        row([Diagram::braid(d)?, id(d)?]),
    ])?;
    let right = col([
        row([Diagram::cap(d)?, id(d)?]),
        row([id(d)?, Diagram::braid(d)?]),
    ])?;
    pair(left, right)
}

/// A cup slides across the braid.
fn nat6(d: usize, _: &Assignment) -> Result<RulePair> {
    let left = col([
        row([id(d)?, Diagram::braid(d)?]),
        row([Diagram::cup(d)?, id(d)?]),
    ])?;
    let right = col([
        row([Diagram::braid(d)?, id(d)?]),
        row([id(d)?, Diagram::cup(d)?]),
    ])?;
    pair(left, right)
}

// ---------------------------------------------------------------------------
// W-node rules

/// The W node is symmetric in its outputs.
fn syb(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(col([Diagram::w(d)?, Diagram::swap(d)?])?, Diagram::w(d)?)
}

/// The black codot is a counit for the W node.
fn unt(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        col([Diagram::w(d)?, row([id(d)?, black_codot(d)?])])?,
        id(d)?,
    )
}

/// Coassociativity of the W node.
fn aso(d: usize, _: &Assignment) -> Result<RulePair> {
    let left = col([Diagram::w(d)?, row([Diagram::w(d)?, id(d)?])])?;
    let right = col([Diagram::w(d)?, row([id(d)?, Diagram::w(d)?])])?;
    pair(left, right)
}

/// The W node copies the black dot.
fn cpy(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        col([black_dot(d)?, Diagram::w(d)?])?,
        row([black_dot(d)?, black_dot(d)?]),
    )
}

fn w_double_cross(d: usize, braid: fn(usize) -> Result<Diagram>) -> Result<RulePair> {
    // Both W outputs cross the third wire one after the other ...
    let left = col([
        row([Diagram::w(d)?, id(d)?]),
        row([id(d)?, braid(d)?]),
        row([braid(d)?, id(d)?]),
    ])?;
    // ... which equals crossing the W input first.
    let right = col([braid(d)?, row([id(d)?, Diagram::w(d)?])])?;
    pair(left, right)
}

/// The W node slides under the braid (its two outputs cross one wire).
fn wnt1(d: usize, _: &Assignment) -> Result<RulePair> {
    w_double_cross(d, Diagram::braid)
}

/// Same slide through the inverse braid.
fn wnt2(d: usize, _: &Assignment) -> Result<RulePair> {
    w_double_cross(d, Diagram::braid_inv)
}

/// The braid acts as the plain symmetry on the W outputs.
fn wsm(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(col([Diagram::w(d)?, Diagram::braid(d)?])?, Diagram::w(d)?)
}

/// Braid and symmetry commute.
fn bsm(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        col([Diagram::swap(d)?, Diagram::braid(d)?])?,
        col([Diagram::braid(d)?, Diagram::swap(d)?])?,
    )
}

/// Black dot against black codot is the empty diagram.
fn ept(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(col([black_dot(d)?, black_codot(d)?])?, Diagram::empty())
}

/// Hopf-style cancellation: W split, antipode `(-1,...,-1)` on one leg,
/// W merge; equal to the disconnected codot-then-dot.
fn bhf(d: usize, _: &Assignment) -> Result<RulePair> {
    let antipode = Diagram::z_spider(1, 1, PhaseVector::minus_ones(d))?;
    let left = col([Diagram::w(d)?, row([id(d)?, antipode]), down_w(d)?])?;
    pair(left, col([black_codot(d)?, black_dot(d)?])?)
}

// ---------------------------------------------------------------------------
// spider and mixed rules

/// Spider fusion: spiders joined by at least one wire fuse, phases
/// multiplying entrywise.
fn s1(_d: usize, a: &Assignment) -> Result<RulePair> {
    let n = a.size("n")?;
    let k = a.size("k")?;
    let m = a.size("m")?;
    let pa = a.phase("a")?;
    let pb = a.phase("b")?;
    let left = col([z(n, k, pb)?, z(k, m, pa)?])?;
    let right = z(n, m, &pa.entrywise_mul(pb))?;
    pair(left, right)
}

/// The phaseless one-in one-out spider is the identity wire.
fn s2(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(z1(1, 1, d)?, id(d)?)
}

/// Bending a spider leg with the compact structure transposes it.
fn s3(d: usize, a: &Assignment) -> Result<RulePair> {
    let p = a.phase("a")?;
    let left = col([row([z(1, 2, p)?, id(d)?]), row([id(d)?, Diagram::cup(d)?])])?;
    pair(left, z(2, 1, p)?)
}

/// Tracing out one side of the braid leaves the square-power phase spider.
fn wps(d: usize, _: &Assignment) -> Result<RulePair> {
    let left = col([
        row([id(d)?, Diagram::cap(d)?]),
        row([Diagram::braid(d)?, id(d)?]),
        row([id(d)?, Diagram::cup(d)?]),
    ])?;
    pair(left, Diagram::z_spider(1, 1, PhaseVector::braid_loop(d))?)
}

fn bialgebra(d: usize, mid: Diagram) -> Result<RulePair> {
    let merge = z1(2, 1, d)?;
    let left = col([merge.clone(), Diagram::w(d)?])?;
    let right = col([
        row([Diagram::w(d)?, Diagram::w(d)?]),
        row([id(d)?, mid, id(d)?]),
        row([merge.clone(), merge]),
    ])?;
    pair(left, right)
}

/// Bialgebra law between the spider merge and the W split.
fn baw(d: usize, _: &Assignment) -> Result<RulePair> {
    bialgebra(d, Diagram::swap(d)?)
}

/// Hopf disconnection: a spider and a W node joined by two wires separate.
fn wbh(d: usize, a: &Assignment) -> Result<RulePair> {
    let left = col([Diagram::w(d)?, z(2, 1, a.phase("a")?)?])?;
    pair(left, col([black_codot(d)?, black_dot(d)?])?)
}

/// The braided form of the bialgebra law.
fn wbs(d: usize, _: &Assignment) -> Result<RulePair> {
    bialgebra(d, Diagram::braid(d)?)
}

/// Phase spiders copy through the W node.
fn pcp(d: usize, a: &Assignment) -> Result<RulePair> {
    let p = a.phase("a")?;
    let left = col([z(1, 1, p)?, Diagram::w(d)?])?;
    let right = col([Diagram::w(d)?, row([z(1, 1, p)?, z(1, 1, p)?])])?;
    pair(left, right)
}

/// Splitting with W, phasing both legs, merging back adds the phases.
fn ad(d: usize, a: &Assignment) -> Result<RulePair> {
    let pa = a.phase("a")?;
    let pb = a.phase("b")?;
    let left = col([
        Diagram::w(d)?,
        row([z(1, 1, pa)?, z(1, 1, pb)?]),
        down_w(d)?,
    ])?;
    pair(left, z(1, 1, &pa.entrywise_add(pb))?)
}

/// The black codot absorbs phase spiders.
fn pcp2(d: usize, a: &Assignment) -> Result<RulePair> {
    let left = col([z(1, 1, a.phase("a")?)?, black_codot(d)?])?;
    pair(left, black_codot(d)?)
}

// ---------------------------------------------------------------------------
// derived equalities

/// Conjugating the inverse braid by the symmetry gives it back.
fn crossinv(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        col([Diagram::swap(d)?, Diagram::braid_inv(d)?, Diagram::swap(d)?])?,
        Diagram::braid_inv(d)?,
    )
}

/// Third Reidemeister move for the inverse braid.
fn braidinv4(d: usize, _: &Assignment) -> Result<RulePair> {
    yang_baxter(d, Diagram::braid_inv)
}

fn braid_trace_right(d: usize, braid: fn(usize) -> Result<Diagram>) -> Result<Diagram> {
    col([
        row([Diagram::cap(d)?, id(d)?]),
        row([id(d)?, braid(d)?]),
        row([Diagram::cup(d)?, id(d)?]),
    ])
}

/// The mirror-image braid trace yields the same phase spider.
fn braid_ptrace(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        braid_trace_right(d, Diagram::braid)?,
        Diagram::z_spider(1, 1, PhaseVector::braid_loop(d))?,
    )
}

/// Inverse-braid trace yields the conjugate phases.
fn braid_ptrace2(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        braid_trace_right(d, Diagram::braid_inv)?,
        Diagram::z_spider(1, 1, PhaseVector::braid_loop_conj(d))?,
    )
}

/// The inverse braid also acts as the symmetry on W outputs.
fn w_inv_braid_sym(d: usize, _: &Assignment) -> Result<RulePair> {
    pair(
        col([Diagram::w(d)?, Diagram::braid_inv(d)?])?,
        Diagram::w(d)?,
    )
}

/// Mirror image of the W-under-braid slide.
fn w_nat_flip(d: usize, _: &Assignment) -> Result<RulePair> {
    let left = col([
        row([id(d)?, Diagram::w(d)?]),
        row([Diagram::braid(d)?, id(d)?]),
        row([id(d)?, Diagram::braid(d)?]),
    ])?;
    let right = col([Diagram::braid(d)?, row([Diagram::w(d)?, id(d)?])])?;
    pair(left, right)
}

/// Bialgebra law in the flipped orientation (bent W merge, spider split).
fn white_downblack_bialg(d: usize, _: &Assignment) -> Result<RulePair> {
    let split = z1(1, 2, d)?;
    let left = col([down_w(d)?, split.clone()])?;
    let right = col([
        row([split.clone(), split]),
        row([id(d)?, Diagram::swap(d)?, id(d)?]),
        row([down_w(d)?, down_w(d)?]),
    ])?;
    pair(left, right)
}

/// Hopf disconnection in the flipped orientation.
fn white_downblack_hopf(d: usize, a: &Assignment) -> Result<RulePair> {
    let left = col([z(1, 2, a.phase("a")?)?, down_w(d)?])?;
    pair(left, col([black_codot(d)?, black_dot(d)?])?)
}

/// Bialgebra with the inverse braid in the middle.
fn white_black_inv_swap(d: usize, _: &Assignment) -> Result<RulePair> {
    bialgebra(d, Diagram::braid_inv(d)?)
}

/// A braid loop multiplies an existing phase by the square-power phases.
fn braid_loop_phase(d: usize, a: &Assignment) -> Result<RulePair> {
    let p = a.phase("a")?;
    let left = col([
        z(1, 1, p)?,
        row([id(d)?, Diagram::cap(d)?]),
        row([Diagram::braid(d)?, id(d)?]),
        row([id(d)?, Diagram::cup(d)?]),
    ])?;
    pair(
        left,
        Diagram::z_spider(1, 1, p.entrywise_mul(&PhaseVector::braid_loop(d)))?,
    )
}

/// A W split merged straight back doubles every nonzero amplitude.
fn addition_two_blacks(d: usize, _: &Assignment) -> Result<RulePair> {
    let left = col([Diagram::w(d)?, down_w(d)?])?;
    pair(
        left,
        Diagram::z_spider(1, 1, PhaseVector::constant(d, Complex64::new(2.0, 0.0)))?,
    )
}

/// Spiders copy the black dot onto all their legs.
fn black_dot_copy(d: usize, a: &Assignment) -> Result<RulePair> {
    let m = a.size("m")?;
    let left = col([black_dot(d)?, z(1, m, a.phase("a")?)?])?;
    let dots: Vec<Diagram> = (0..m).map(|_| black_dot(d)).collect::<Result<_>>()?;
    pair(left, row(dots))
}

/// A spider and a black spider joined by m >= 2 wires disconnect.
fn general_hopf(d: usize, a: &Assignment) -> Result<RulePair> {
    let m = a.size("m")?;
    let left = col([
        z(1, m, a.phase("a")?)?,
        black_spider(m, d, Orientation::Down)?,
    ])?;
    pair(left, col([black_codot(d)?, black_dot(d)?])?)
}

// ---------------------------------------------------------------------------
// catalogs

/// The full rewrite-rule catalog.
pub fn catalog() -> Vec<RewriteRule> {
    use RuleKind::Rule;
    vec![
        RewriteRule::new("Bd1", Rule, "braid", vec![], bd1),
        RewriteRule::new("Bd2", Rule, "braid", vec![], bd2),
        RewriteRule::new("Bd3", Rule, "braid", vec![], bd3),
        RewriteRule::new("Bd4", Rule, "braid", vec![], bd4),
        RewriteRule::new("Nat1", Rule, "braid", vec![phase("a")], nat1),
        RewriteRule::new("Nat2", Rule, "braid", vec![phase("a")], nat2),
        RewriteRule::new("Nat3", Rule, "braid", vec![phase("a")], nat3),
        RewriteRule::new("Nat4", Rule, "braid", vec![phase("a")], nat4),
        RewriteRule::new("Nat5", Rule, "braid", vec![], nat5),
        RewriteRule::new("Nat6", Rule, "braid", vec![], nat6),
        RewriteRule::new("Syb", Rule, "w-node", vec![], syb),
        RewriteRule::new("Unt", Rule, "w-node", vec![], unt),
        RewriteRule::new("Aso", Rule, "w-node", vec![], aso),
        RewriteRule::new("Cpy", Rule, "w-node", vec![], cpy),
        RewriteRule::new("Wnt1", Rule, "w-node", vec![], wnt1),
        RewriteRule::new("Wnt2", Rule, "w-node", vec![], wnt2),
        RewriteRule::new("Wsm", Rule, "w-node", vec![], wsm),
        RewriteRule::new("Bsm", Rule, "braid", vec![], bsm),
        RewriteRule::new("Ept", Rule, "w-node", vec![], ept),
        RewriteRule::new("Bhf", Rule, "w-node", vec![], bhf),
        RewriteRule::new(
            "S1",
            Rule,
            "spider",
            vec![
                size("n", 0, 2),
                size("k", 1, 3),
                size("m", 0, 2),
                phase("a"),
                phase("b"),
            ],
            s1,
        ),
        RewriteRule::new("S2", Rule, "spider", vec![], s2),
        RewriteRule::new("S3", Rule, "spider", vec![phase("a")], s3),
        RewriteRule::new("Wps", Rule, "spider", vec![], wps),
        RewriteRule::new("Baw", Rule, "spider-w", vec![], baw),
        RewriteRule::new("WBh", Rule, "spider-w", vec![phase("a")], wbh),
        RewriteRule::new("WBs", Rule, "spider-w", vec![], wbs),
        RewriteRule::new("Pcp", Rule, "spider-w", vec![phase("a")], pcp),
        RewriteRule::new("AD", Rule, "spider-w", vec![phase("a"), phase("b")], ad),
        RewriteRule::new("Pcp2", Rule, "spider-w", vec![phase("a")], pcp2),
    ]
}

/// The derived equalities proved from the rules.
pub fn lemma_catalog() -> Vec<RewriteRule> {
    use RuleKind::Lemma;
    vec![
        RewriteRule::new("crossinv", Lemma, "braid", vec![], crossinv),
        RewriteRule::new("braidinv4", Lemma, "braid", vec![], braidinv4),
        RewriteRule::new("braid_ptrace", Lemma, "braid", vec![], braid_ptrace),
        RewriteRule::new("braid_ptrace2", Lemma, "braid", vec![], braid_ptrace2),
        RewriteRule::new("w_inv_braid_sym", Lemma, "w-node", vec![], w_inv_braid_sym),
        RewriteRule::new("w_nat_flip", Lemma, "w-node", vec![], w_nat_flip),
        RewriteRule::new(
            "white_downblack_bialg",
            Lemma,
            "spider-w",
            vec![],
            white_downblack_bialg,
        ),
        RewriteRule::new(
            "white_downblack_hopf",
            Lemma,
            "spider-w",
            vec![phase("a")],
            white_downblack_hopf,
        ),
        RewriteRule::new(
            "white_black_inv_swap",
            Lemma,
            "spider-w",
            vec![],
            white_black_inv_swap,
        ),
        RewriteRule::new(
            "braid_loop_phase",
            Lemma,
            "spider",
            vec![phase("a")],
            braid_loop_phase,
        ),
        RewriteRule::new(
            "addition_two_blacks",
            Lemma,
            "w-node",
            vec![],
            addition_two_blacks,
        ),
        RewriteRule::new(
            "black_dot_copy",
            Lemma,
            "spider-w",
            vec![size("m", 1, 4), phase("a")],
            black_dot_copy,
        ),
        RewriteRule::new(
            "general_hopf",
            Lemma,
            "spider-w",
            vec![size("m", 2, 4), phase("a")],
            general_hopf,
        ),
    ]
}

// ---------------------------------------------------------------------------
// verifier

/// Deterministic per-cell seed derived from the global seed, rule name and
/// dimension (FNV-1a, stable across platforms).
pub fn cell_seed(seed: u64, name: &str, d: usize) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for byte in name.bytes() {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^= d as u64;
    h.wrapping_mul(0x0000_0100_0000_01b3)
}

fn signatures_compatible(lhs: &Diagram, rhs: &Diagram) -> bool {
    let ok = |a: &WireSignature, b: &WireSignature| a == b || a.strip_units() == b.strip_units();
    ok(lhs.dom(), rhs.dom()) && ok(lhs.cod(), rhs.cod())
}

/// Check a single rule instance; errors from builders or the interpreter
/// propagate.
pub fn check_instance(
    rule: &RewriteRule,
    d: usize,
    assignment: &Assignment,
    tol: f64,
    interp: &mut Interpreter,
) -> Result<crate::matrix::Comparison> {
    let built = (rule.build)(d, assignment)?;
    if !signatures_compatible(&built.lhs, &built.rhs) {
        return Err(Error::RuleSignatureMismatch {
            rule: rule.name.to_string(),
            lhs_dom: built.lhs.dom().clone(),
            lhs_cod: built.lhs.cod().clone(),
            rhs_dom: built.rhs.dom().clone(),
            rhs_cod: built.rhs.cod().clone(),
        });
    }
    let lhs = interp.interpret(&built.lhs)?;
    let rhs = interp.interpret(&built.rhs)?;
    Ok(approx_equal(&lhs, &rhs, tol))
}

/// Verify one rule at one dimension with randomized parameters.
///
/// Rules without parameters are deterministic, so a single trial is run
/// regardless of `trials`. Builder and signature errors are reported in the
/// `failure` field, never swallowed.
pub fn verify(
    rule: &RewriteRule,
    d: usize,
    trials: usize,
    tol: f64,
    seed: u64,
) -> VerificationReport {
    let seed = cell_seed(seed, rule.name, d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = if rule.params.is_empty() {
        1
    } else {
        trials.max(1)
    };
    let mut report = VerificationReport {
        rule: rule.name.to_string(),
        kind: rule.kind,
        dimension: d,
        trials,
        seed,
        pass: true,
        max_deviation: 0.0,
        failure: None,
    };
    // Parameterless subterms (the bent W, black dots) repeat across trials;
    // one interpreter per cell lets the structural memo absorb them.
    let mut interp = Interpreter::with_limit(VERIFY_ENTRY_LIMIT);
    for _ in 0..trials {
        let assignment = Assignment::draw(&mut rng, &rule.params, d);
        match check_instance(rule, d, &assignment, tol, &mut interp) {
            Ok(cmp) => {
                if cmp.max_deviation.is_finite() {
                    report.max_deviation = report.max_deviation.max(cmp.max_deviation);
                } else {
                    report.max_deviation = f64::INFINITY;
                }
                if !cmp.pass {
                    report.pass = false;
                    if report.failure.is_none() {
                        let detail = cmp.reason.unwrap_or_else(|| format!("{assignment}"));
                        report.failure = Some(detail);
                    }
                }
            }
            Err(err) => {
                report.pass = false;
                report.max_deviation = f64::INFINITY;
                report.failure = Some(err.to_string());
                break;
            }
        }
    }
    report
}

/// Run the full rule and lemma catalogs over each dimension. Failures are
/// aggregated; the sweep never aborts early.
pub fn verify_all(dims: &[usize], trials: usize, tol: f64, seed: u64) -> Vec<VerificationReport> {
    let mut rules = catalog();
    rules.extend(lemma_catalog());
    let mut reports = Vec::with_capacity(rules.len() * dims.len());
    for rule in &rules {
        for &d in dims {
            reports.push(verify(rule, d, trials, tol, seed));
        }
    }
    reports
}

/// Maximum deviation between the two sides of the W-W bialgebra shape
/// (W merge into W split against the braided double-W form). There is no
/// such rule in the calculus; this quantifies how badly it fails.
pub fn bialgebra_counterexample(d: usize) -> Result<f64> {
    let lhs = Diagram::column([down_w(d)?, Diagram::w(d)?])?;
    let rhs = Diagram::column([
        Diagram::row([Diagram::w(d)?, Diagram::w(d)?]),
        Diagram::row([
            Diagram::identity(d)?,
            Diagram::braid(d)?,
            Diagram::identity(d)?,
        ]),
        Diagram::row([down_w(d)?, down_w(d)?]),
    ])?;
    let mut interp = Interpreter::with_limit(VERIFY_ENTRY_LIMIT);
    let l = interp.interpret(&lhs)?;
    let r = interp.interpret(&rhs)?;
    Ok(l.max_abs_diff(&r).expect("both sides are 2 -> 2"))
}
