//! Property tests for the composition laws of the interpretation.

use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zwcalc::diagram::Diagram;
use zwcalc::interpret::{interpret_with_limit, Interpreter};
use zwcalc::matrix::ComplexMatrix;
use zwcalc::phase::PhaseVector;
use zwcalc::sampling::{random_diagram, random_phase, GeneratorSet};

const LIMIT: usize = 8_000_000;

fn eval(d: &Diagram) -> ComplexMatrix {
    interpret_with_limit(d, LIMIT).expect("interpretable")
}

fn close(a: &ComplexMatrix, b: &ComplexMatrix) -> bool {
    a.max_abs_diff(b).is_some_and(|dev| dev <= 1e-9)
}

/// Functoriality: composition of diagrams maps to composition of matrices.
#[test]
fn interpretation_is_functorial_on_random_composites() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for trial in 0..100 {
        let d = if trial % 2 == 0 { 2 } else { 3 };
        let a = random_diagram(&mut rng, d, GeneratorSet::Full, 3, 4).unwrap();
        let b = random_diagram(&mut rng, d, GeneratorSet::Full, 3, 4).unwrap();

        // par always composes; seq needs a mediating diagram with matching
        // boundary, so check it through a par-split of `a`'s codomain.
        let par = Diagram::par(a.clone(), b.clone());
        assert!(
            close(&eval(&par), &eval(&a).kron(&eval(&b))),
            "trial {trial}"
        );

        let wires = a.cod().len();
        let follow = Diagram::identities(d, wires).unwrap();
        let seq = Diagram::seq(a.clone(), follow.clone()).unwrap();
        assert!(
            close(&eval(&seq), &eval(&follow).matmul(&eval(&a))),
            "trial {trial}"
        );
    }
}

/// seq(seq(a,b),c) and seq(a,seq(b,c)) interpret identically.
#[test]
fn seq_is_associative_under_interpretation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let d = rng.random_range(2..=3);
        let a = random_diagram(&mut rng, d, GeneratorSet::Full, 2, 4).unwrap();
        let wires = a.cod().len();
        let b = layer_of_phases(&mut rng, d, wires);
        let c = layer_of_phases(&mut rng, d, wires);
        let left = Diagram::seq(Diagram::seq(a.clone(), b.clone()).unwrap(), c.clone()).unwrap();
        let right = Diagram::seq(a, Diagram::seq(b, c).unwrap()).unwrap();
        assert!(close(&eval(&left), &eval(&right)));
    }
}

/// Par is associative and unital under interpretation.
#[test]
fn par_is_associative_and_unital_under_interpretation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let d = rng.random_range(2..=3);
        let a = random_diagram(&mut rng, d, GeneratorSet::Full, 2, 2).unwrap();
        let b = random_diagram(&mut rng, d, GeneratorSet::Full, 2, 2).unwrap();
        let c = random_diagram(&mut rng, d, GeneratorSet::Full, 2, 2).unwrap();
        let left = Diagram::par(Diagram::par(a.clone(), b.clone()), c.clone());
        let right = Diagram::par(a.clone(), Diagram::par(b, c));
        assert!(close(&eval(&left), &eval(&right)));

        let unit = Diagram::par(Diagram::empty(), a.clone());
        assert!(close(&eval(&unit), &eval(&a)));
        let unit = Diagram::par(a.clone(), Diagram::empty());
        assert!(close(&eval(&unit), &eval(&a)));
    }
}

/// Interchange: (a x b) ; (c x d) = (a ; c) x (b ; d) whenever both sides
/// type-check.
#[test]
fn interchange_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let d = rng.random_range(2..=3);
        let a = random_diagram(&mut rng, d, GeneratorSet::Full, 2, 3).unwrap();
        let b = random_diagram(&mut rng, d, GeneratorSet::Full, 2, 3).unwrap();
        let c = layer_of_phases(&mut rng, d, a.cod().len());
        let e = layer_of_phases(&mut rng, d, b.cod().len());

        let lhs = Diagram::seq(
            Diagram::par(a.clone(), b.clone()),
            Diagram::par(c.clone(), e.clone()),
        )
        .unwrap();
        let rhs = Diagram::par(Diagram::seq(a, c).unwrap(), Diagram::seq(b, e).unwrap());
        assert!(close(&eval(&lhs), &eval(&rhs)));
    }
}

/// Swap is an involution and the braid entries have unit modulus.
#[test]
fn swap_involution_and_braid_modulus() {
    for d in 2..=5 {
        let swap2 = Diagram::seq(Diagram::swap(d).unwrap(), Diagram::swap(d).unwrap()).unwrap();
        assert!(close(&eval(&swap2), &ComplexMatrix::identity(d * d)));

        let braid = eval(&Diagram::braid(d).unwrap());
        for r in 0..braid.rows() {
            for c in 0..braid.cols() {
                let z = braid.get(r, c);
                if z != Complex64::new(0.0, 0.0) {
                    assert!((z.norm() - 1.0).abs() < 1e-12);
                }
            }
        }
    }
}

fn layer_of_phases(rng: &mut impl Rng, d: usize, wires: usize) -> Diagram {
    Diagram::row((0..wires).map(|_| Diagram::z_spider(1, 1, random_phase(rng, d)).unwrap()))
}

// ---------------------------------------------------------------------------
// proptest: algebra on phase vectors and spider fusion

fn complex_strategy() -> impl Strategy<Value = Complex64> {
    (0.25f64..2.0, 0.0f64..std::f64::consts::TAU)
        .prop_map(|(modulus, angle)| Complex64::from_polar(modulus, angle))
}

fn phase_strategy(d: usize) -> impl Strategy<Value = PhaseVector> {
    prop::collection::vec(complex_strategy(), d - 1).prop_map(PhaseVector::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Fused spiders interpret to the entrywise product of parameters.
    #[test]
    fn spider_fusion_is_entrywise_product(
        a in phase_strategy(3),
        b in phase_strategy(3),
        n in 0usize..3,
        m in 0usize..3,
        k in 1usize..3,
    ) {
        let top = Diagram::z_spider(n, k, b.clone()).unwrap();
        let bottom = Diagram::z_spider(k, m, a.clone()).unwrap();
        let fused = Diagram::z_spider(n, m, a.entrywise_mul(&b)).unwrap();
        let chain = Diagram::seq(top, bottom).unwrap();
        prop_assert!(close(&eval(&chain), &eval(&fused)));
    }

    /// A spider sandwiched between plain units computes the coefficient sum.
    #[test]
    fn spider_state_norm(a in phase_strategy(4)) {
        let total: Complex64 = (0..4).map(|j| a.coefficient(j)).sum();
        let closed = Diagram::column([
            Diagram::z_spider(0, 1, a).unwrap(),
            Diagram::z_plain(1, 0, 4).unwrap(),
        ]).unwrap();
        let m = eval(&closed);
        prop_assert!((m.get(0, 0) - total).norm() <= 1e-9);
    }

    /// Interpretation respects dagger-like transposition of spiders through
    /// leg bending (cap conjugation).
    #[test]
    fn spider_leg_bend(a in phase_strategy(2)) {
        let d = 2;
        let bent = Diagram::column([
            Diagram::par(Diagram::z_spider(1, 2, a.clone()).unwrap(), Diagram::identity(d).unwrap()),
            Diagram::par(Diagram::identity(d).unwrap(), Diagram::cup(d).unwrap()),
        ]).unwrap();
        let direct = Diagram::z_spider(2, 1, a).unwrap();
        prop_assert!(close(&eval(&bent), &eval(&direct)));
    }
}

/// A verification cell shares one memo across trials; the shared results
/// must agree with fresh evaluation.
#[test]
fn memoized_interpreter_agrees_with_fresh_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut shared = Interpreter::with_limit(LIMIT);
    for _ in 0..20 {
        let d = rng.random_range(2..=3);
        let diagram = random_diagram(&mut rng, d, GeneratorSet::Full, 5, 4).unwrap();
        let memoized = shared.interpret(&diagram).unwrap();
        let fresh = eval(&diagram);
        assert!(close(&memoized, &fresh));
    }
}
