//! Seeded generation of random well-typed diagrams.
//!
//! Diagrams are grown as layered circuits: each layer tiles the current
//! wire boundary with generators whose domains fit, so every draw is
//! well-typed by construction. Used by the property tests and the
//! round-trip suites.

use num_complex::Complex64;
use rand::Rng;

use crate::diagram::Diagram;
use crate::error::Result;
use crate::phase::PhaseVector;

/// Which generator pool to draw leaves from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSet {
    Zw,
    Zx,
    /// Everything expressible in the single-dimension term language.
    Full,
}

pub fn random_phase(rng: &mut impl Rng, d: usize) -> PhaseVector {
    PhaseVector::new(
        (1..d)
            .map(|_| {
                Complex64::from_polar(
                    rng.random_range(0.5..1.5),
                    rng.random_range(0.0..std::f64::consts::TAU),
                )
            })
            .collect(),
    )
}

/// Draw a random well-typed diagram at dimension `d` with roughly
/// `target_leaves` non-identity generators and at most `max_wires` wires
/// at any boundary.
pub fn random_diagram(
    rng: &mut impl Rng,
    d: usize,
    set: GeneratorSet,
    target_leaves: usize,
    max_wires: usize,
) -> Result<Diagram> {
    let start_wires = rng.random_range(1..=max_wires.min(3));
    let mut diagram = Diagram::identities(d, start_wires)?;
    let mut budget = target_leaves;
    let mut guard = 0;
    while budget > 0 && guard < 40 {
        guard += 1;
        let wires = diagram.cod().len();
        let layer = random_layer(rng, d, set, wires, &mut budget, max_wires)?;
        diagram = Diagram::seq(diagram, layer)?;
    }
    Ok(diagram)
}

/// One layer tiling `wires` input wires; decrements `budget` for each
/// non-identity generator placed.
fn random_layer(
    rng: &mut impl Rng,
    d: usize,
    set: GeneratorSet,
    wires: usize,
    budget: &mut usize,
    max_wires: usize,
) -> Result<Diagram> {
    let mut parts: Vec<Diagram> = Vec::new();
    let mut remaining = wires;
    let mut out_wires = 0;

    // A wireless boundary can only restart through a state; cap or unit.
    if remaining == 0 && *budget > 0 {
        *budget = budget.saturating_sub(1);
        let part = if rng.random_bool(0.5) && max_wires >= 2 {
            Diagram::cap(d)?
        } else {
            Diagram::z_spider(0, 1, random_phase(rng, d))?
        };
        return Ok(part);
    }

    while remaining > 0 {
        let grown = out_wires + remaining;
        let choice = rng.random_range(0..12u32);
        let part = if *budget == 0 {
            Diagram::identity(d)?
        } else {
            match (choice, set) {
                (0, _) => Diagram::z_spider(1, 1, random_phase(rng, d))?,
                (1, _) if remaining >= 2 => Diagram::z_spider(2, 1, random_phase(rng, d))?,
                (2, _) if grown < max_wires => Diagram::z_spider(1, 2, random_phase(rng, d))?,
                (3, _) if remaining >= 2 => Diagram::swap(d)?,
                (4, _) if remaining >= 2 => Diagram::cup(d)?,
                (5, GeneratorSet::Zw | GeneratorSet::Full) if grown < max_wires => Diagram::w(d)?,
                (6, GeneratorSet::Zw | GeneratorSet::Full) if remaining >= 2 => Diagram::braid(d)?,
                (7, GeneratorSet::Zw | GeneratorSet::Full) if remaining >= 2 => {
                    Diagram::braid_inv(d)?
                }
                (5 | 6, GeneratorSet::Zx) => Diagram::hadamard(d)?,
                (7, GeneratorSet::Zx) => Diagram::hadamard_dagger(d)?,
                (8, GeneratorSet::Zx | GeneratorSet::Full) => Diagram::triangle(d)?,
                (9, GeneratorSet::Zx | GeneratorSet::Full) => Diagram::triangle_inv(d)?,
                (10, _) => Diagram::z_spider(1, 0, random_phase(rng, d))?,
                _ => Diagram::identity(d)?,
            }
        };
        let consumed = part.dom().len();
        if !matches!(part.dom().dims().first(), None | Some(_)) || consumed > remaining {
            continue;
        }
        if consumed > 0 || !part.cod().is_empty() {
            if !is_identity(&part) {
                *budget = budget.saturating_sub(1);
            }
            remaining -= consumed;
            out_wires += part.cod().len();
            parts.push(part);
        }
    }
    Ok(Diagram::row(parts))
}

fn is_identity(d: &Diagram) -> bool {
    matches!(
        d.as_leaf(),
        Some(crate::diagram::Generator::Identity { .. })
    )
}
