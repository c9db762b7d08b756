//! Diagrams defined in terms of the generators: the bent W node, the black
//! dot and codot, black spiders of any leg count, and the Hadamard-conjugated
//! X spider and red tau gate of the ZX side.

use crate::diagram::Diagram;
use crate::error::Result;
use crate::phase::PhaseVector;

/// The composites definable directly from the ZW generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivedZw {
    /// `2 -> 1` flipped W node: `|0><00| + sum_i |i>(<0i| + <i0|)`.
    DownW,
    /// `0 -> 1` state `|0>`.
    BlackDot,
    /// `1 -> 0` costate `<0|`.
    BlackCodot,
    /// Z spider drawn without a phase label: parameter `(1,...,1)`.
    WhiteNoPhase { inputs: usize, outputs: usize },
    /// `1 -> 0` bent Z-spider unit: `sum_j <j|`.
    DownWhiteUnit,
}

/// Build one of the derived ZW diagrams at dimension `d`.
pub fn derived_zw(kind: DerivedZw, d: usize) -> Result<Diagram> {
    match kind {
        DerivedZw::DownW => down_w(d),
        DerivedZw::BlackDot => black_dot(d),
        DerivedZw::BlackCodot => black_codot(d),
        DerivedZw::WhiteNoPhase { inputs, outputs } => Diagram::z_plain(inputs, outputs, d),
        DerivedZw::DownWhiteUnit => down_white_unit(d),
    }
}

/// W node rotated by the compact structure: cap on the left, the W fired on
/// the fresh wire, both outputs cupped against the original inputs.
pub fn down_w(d: usize) -> Result<Diagram> {
    let id = Diagram::identity(d)?;
    Diagram::column([
        Diagram::row([Diagram::cap(d)?, id.clone(), id.clone()]),
        Diagram::row([id.clone(), Diagram::w(d)?, id.clone(), id.clone()]),
        Diagram::row([id.clone(), id.clone(), Diagram::cup(d)?, id.clone()]),
        Diagram::row([id, Diagram::cup(d)?]),
    ])
}

/// `<0|`: the W node with its two outputs cupped together.
pub fn black_codot(d: usize) -> Result<Diagram> {
    Diagram::column([Diagram::w(d)?, Diagram::cup(d)?])
}

/// `|0>`: a cap with one leg closed by the black codot.
pub fn black_dot(d: usize) -> Result<Diagram> {
    Diagram::column([
        Diagram::cap(d)?,
        Diagram::par(black_codot(d)?, Diagram::identity(d)?),
    ])
}

/// `sum_j <j|`: the 0 -> 1 plain spider bent down by a cup.
pub fn down_white_unit(d: usize) -> Result<Diagram> {
    Diagram::column([
        Diagram::par(Diagram::z_plain(0, 1, d)?, Diagram::identity(d)?),
        Diagram::cup(d)?,
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `1 -> m`
    Up,
    /// `m -> 1`
    Down,
}

/// Black spider with `legs` legs, built as a left-nested tree of W nodes
/// (well defined by W associativity). Interpretation:
/// `|0...0><0| + sum_i sum_k |0..i..0><i|` for the up orientation, and its
/// transpose for the down orientation.
pub fn black_spider(legs: usize, d: usize, orientation: Orientation) -> Result<Diagram> {
    assert!(legs >= 1, "black spider needs at least one leg");
    match orientation {
        Orientation::Up => {
            if legs == 1 {
                return Diagram::identity(d);
            }
            let mut spider = Diagram::w(d)?;
            for _ in 2..legs {
                spider = Diagram::seq(Diagram::w(d)?, Diagram::par(spider, Diagram::identity(d)?))?;
            }
            Ok(spider)
        }
        Orientation::Down => {
            if legs == 1 {
                return Diagram::identity(d);
            }
            let mut spider = down_w(d)?;
            for _ in 2..legs {
                spider = Diagram::seq(Diagram::par(spider, Diagram::identity(d)?), down_w(d)?)?;
            }
            Ok(spider)
        }
    }
}

/// Scalar (0 -> 0) loop: a cap closed by a cup through a phase spider.
/// Its value is `sum_j a_j`; with [`PhaseVector::inverse_dim`] this is `1/d`.
pub fn scalar_loop(phase: PhaseVector) -> Result<Diagram> {
    let d = phase.dim();
    Diagram::column([
        Diagram::cap(d)?,
        Diagram::par(Diagram::z_spider(1, 1, phase)?, Diagram::identity(d)?),
        Diagram::cup(d)?,
    ])
}

/// The `1/d` scalar gadget.
pub fn inverse_dim_scalar(d: usize) -> Result<Diagram> {
    scalar_loop(PhaseVector::inverse_dim(d))
}

/// A layer of `count` parallel copies of `gate`.
fn layer(gate: &Diagram, count: usize) -> Diagram {
    Diagram::row((0..count).map(|_| gate.clone()))
}

/// X spider with parameter `j`, built from ZX generators: a Z spider with
/// harmonic phases conjugated by Hadamards, times the `1/d` scalar.
/// Matches the congruence-sum closed form
/// `sum |i_1..i_m><j_1..j_n|` over `i_1+..+i_m+j = j_1+..+j_n (mod d)`.
pub fn x_spider(inputs: usize, outputs: usize, j: usize, d: usize) -> Result<Diagram> {
    assert!(j < d, "x spider parameter must satisfy 0 <= j < d");
    let core = Diagram::column([
        layer(&Diagram::hadamard_dagger(d)?, inputs),
        Diagram::z_spider(inputs, outputs, PhaseVector::fourier(d, j))?,
        layer(&Diagram::hadamard(d)?, outputs),
    ])?;
    Ok(Diagram::par(inverse_dim_scalar(d)?, core))
}

/// The red tau gate: Hadamard-conjugated Gauss-phase spider times `1/d`.
/// Matches `(1/d) sum e^{i t_l} xi^{(k-n)l} |k><n|` with `t_l = l*pi + l^2*pi/d`.
pub fn red_tau(d: usize) -> Result<Diagram> {
    let core = Diagram::column([
        Diagram::hadamard_dagger(d)?,
        Diagram::z_spider(1, 1, PhaseVector::gauss(d))?,
        Diagram::hadamard(d)?,
    ])?;
    Ok(Diagram::par(inverse_dim_scalar(d)?, core))
}
