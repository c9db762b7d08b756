//! The standard interpretation: diagrams to dense complex matrices.
//!
//! Parallel composition maps to the Kronecker product and sequential
//! composition to the matrix product (the lower diagram acts after the
//! upper one, so `[[seq(a, b)]] = [[b]] * [[a]]`). Basis ordering is
//! big-endian mixed-radix: the leftmost wire is most significant.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_complex::Complex64;

use crate::diagram::{Diagram, Generator, Node};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, RootOfUnityTable};

/// Default cap on `rows * cols` of any matrix built during interpretation.
pub const DEFAULT_ENTRY_LIMIT: usize = 1_000_000;

/// Matrix of a single generator, transcribed from the closed forms.
pub fn generator_matrix(gen: &Generator) -> ComplexMatrix {
    let one = Complex64::new(1.0, 0.0);
    match gen {
        Generator::ZSpider {
            inputs,
            outputs,
            phase,
        } => {
            let d = phase.dim();
            let rows = d.pow(*outputs as u32);
            let cols = d.pow(*inputs as u32);
            let mut m = ComplexMatrix::zeros(rows, cols);
            for j in 0..d {
                // index of |j...j> in mixed radix: j * (d^k - 1) / (d - 1).
                // With no legs at all every term lands on the same scalar
                // entry, so accumulate rather than set.
                let rep = |k: usize| -> usize { (0..k).fold(0, |acc, _| acc * d + j) };
                m.add_assign_entry(rep(*outputs), rep(*inputs), phase.coefficient(j));
            }
            m
        }
        Generator::W { dim } => {
            let d = *dim;
            let mut m = ComplexMatrix::zeros(d * d, d);
            m.set(0, 0, one); // |00><0|
            for i in 1..d {
                m.add_assign_entry(i, i, one); // |0i><i|
                m.add_assign_entry(i * d, i, one); // |i0><i|
            }
            m
        }
        Generator::Braid { dim } => braid_matrix(*dim, false),
        Generator::BraidInv { dim } => braid_matrix(*dim, true),
        Generator::Identity { dim } => ComplexMatrix::identity(*dim),
        Generator::Swap { left, right } => {
            let (s, t) = (*left, *right);
            let mut m = ComplexMatrix::zeros(t * s, s * t);
            for k in 0..s {
                for l in 0..t {
                    m.set(l * s + k, k * t + l, one);
                }
            }
            m
        }
        Generator::Cap { dim } => {
            let d = *dim;
            let mut m = ComplexMatrix::zeros(d * d, 1);
            for j in 0..d {
                m.set(j * d + j, 0, one);
            }
            m
        }
        Generator::Cup { dim } => {
            let d = *dim;
            let mut m = ComplexMatrix::zeros(1, d * d);
            for j in 0..d {
                m.set(0, j * d + j, one);
            }
            m
        }
        Generator::Hadamard { dim } => hadamard_matrix(*dim, false),
        Generator::HadamardDagger { dim } => hadamard_matrix(*dim, true),
        Generator::Triangle { dim } => triangle_matrix(*dim, 1.0),
        Generator::TriangleInv { dim } => triangle_matrix(*dim, -1.0),
        // Under big-endian ordering |k,l> already sits at index k*t+l, so
        // both dimension converters are identity matrices.
        Generator::Binder { s, t } | Generator::Splitter { s, t } => ComplexMatrix::identity(s * t),
    }
}

fn braid_matrix(d: usize, inverse: bool) -> ComplexMatrix {
    let table = RootOfUnityTable::new(d);
    let mut m = ComplexMatrix::zeros(d * d, d * d);
    for j in 0..d {
        for k in 0..d {
            let phase = if inverse {
                table.power_conj(j * k)
            } else {
                table.power(j * k)
            };
            m.set(j * d + k, k * d + j, phase);
        }
    }
    m
}

fn hadamard_matrix(d: usize, inverse: bool) -> ComplexMatrix {
    let table = RootOfUnityTable::new(d);
    let mut m = ComplexMatrix::zeros(d, d);
    for j in 0..d {
        for k in 0..d {
            let phase = if inverse {
                table.power_conj(j * k)
            } else {
                table.power(j * k)
            };
            m.set(j, k, phase);
        }
    }
    m
}

fn triangle_matrix(d: usize, sign: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(d);
    for i in 1..d {
        m.set(0, i, Complex64::new(sign, 0.0));
    }
    m
}

/// Recursive evaluator with an entry-count guard and a structural memo.
///
/// The memo makes repeated subterms (a bent W inside every leg of a black
/// spider, say) cost one evaluation; diagrams are immutable so sharing
/// results is safe.
pub struct Interpreter {
    limit: usize,
    memo: HashMap<MemoKey, Arc<ComplexMatrix>>,
}

impl Default for Interpreter {
    fn default() -> Self {
        Self::new()
    }
}

impl Interpreter {
    pub fn new() -> Self {
        Self::with_limit(DEFAULT_ENTRY_LIMIT)
    }

    pub fn with_limit(limit: usize) -> Self {
        Interpreter {
            limit,
            memo: HashMap::new(),
        }
    }

    pub fn interpret(&mut self, diagram: &Diagram) -> Result<Arc<ComplexMatrix>> {
        let rows = diagram.cod().space_dim();
        let cols = diagram.dom().space_dim();
        self.check_size(rows, cols)?;

        let key = MemoKey(diagram.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(Arc::clone(hit));
        }

        let result = match diagram.node() {
            Node::Empty => ComplexMatrix::scalar(Complex64::new(1.0, 0.0)),
            Node::Leaf(gen) => generator_matrix(gen),
            Node::Seq(a, b) => {
                let ma = self.interpret(a)?;
                let mb = self.interpret(b)?;
                mb.matmul(&ma)
            }
            Node::Par(a, b) => {
                let ma = self.interpret(a)?;
                let mb = self.interpret(b)?;
                self.check_size(ma.rows() * mb.rows(), ma.cols() * mb.cols())?;
                ma.kron(&mb)
            }
        };
        let result = Arc::new(result);
        self.memo.insert(key, Arc::clone(&result));
        Ok(result)
    }

    fn check_size(&self, rows: usize, cols: usize) -> Result<()> {
        let entries = rows.saturating_mul(cols);
        if entries > self.limit {
            Err(Error::MatrixTooLarge {
                entries,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

/// One-shot interpretation with the default entry limit.
pub fn interpret(diagram: &Diagram) -> Result<ComplexMatrix> {
    let mut interp = Interpreter::new();
    let m = interp.interpret(diagram)?;
    Ok(ComplexMatrix::clone(&m))
}

/// One-shot interpretation with an explicit entry limit.
pub fn interpret_with_limit(diagram: &Diagram, limit: usize) -> Result<ComplexMatrix> {
    let mut interp = Interpreter::with_limit(limit);
    let m = interp.interpret(diagram)?;
    Ok(ComplexMatrix::clone(&m))
}

/// Closed form of the X spider: `sum |i_1..i_m><j_1..j_n|` over all index
/// tuples with `i_1+..+i_m + j = j_1+..+j_n (mod d)`. Used as an oracle for
/// the Hadamard-conjugated construction.
pub fn x_spider_formula(inputs: usize, outputs: usize, j: usize, d: usize) -> ComplexMatrix {
    assert!(j < d);
    let rows = d.pow(outputs as u32);
    let cols = d.pow(inputs as u32);
    let mut m = ComplexMatrix::zeros(rows, cols);
    for r in 0..rows {
        let out_sum: usize = digits(r, d, outputs).iter().sum();
        for c in 0..cols {
            let in_sum: usize = digits(c, d, inputs).iter().sum();
            if (out_sum + j) % d == in_sum % d {
                m.set(r, c, Complex64::new(1.0, 0.0));
            }
        }
    }
    m
}

/// Closed form of the red tau gate:
/// `(1/d) sum_{k,l,n} e^{i t_l} xi^{(k-n)l} |k><n|`, `t_l = l*pi + l^2*pi/d`.
pub fn red_tau_formula(d: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(d, d);
    for k in 0..d {
        for n in 0..d {
            let mut acc = Complex64::new(0.0, 0.0);
            for l in 0..d {
                let tau_l = l as f64 * PI + (l * l) as f64 * PI / d as f64;
                let e = ((k as isize - n as isize) * l as isize).rem_euclid(d as isize) as f64;
                acc += Complex64::from_polar(1.0, tau_l)
                    * Complex64::from_polar(1.0, 2.0 * PI * e / d as f64);
            }
            m.set(k, n, acc / d as f64);
        }
    }
    m
}

/// Big-endian digits of `index` in base `d`, most significant first.
fn digits(index: usize, d: usize, count: usize) -> Vec<usize> {
    let mut out = vec![0; count];
    let mut rest = index;
    for slot in (0..count).rev() {
        out[slot] = rest % d;
        rest /= d;
    }
    out
}

/// Memo key with bitwise float semantics so `Hash` and `Eq` agree.
struct MemoKey(Diagram);

impl PartialEq for MemoKey {
    fn eq(&self, other: &Self) -> bool {
        nodes_equal(&self.0, &other.0)
    }
}

impl Eq for MemoKey {}

impl Hash for MemoKey {
    fn hash<H: Hasher>(&self, state: &mut H) {
        hash_node(&self.0, state);
    }
}

fn nodes_equal(a: &Diagram, b: &Diagram) -> bool {
    match (a.node(), b.node()) {
        (Node::Empty, Node::Empty) => true,
        (Node::Leaf(x), Node::Leaf(y)) => generators_bit_equal(x, y),
        (Node::Seq(a1, a2), Node::Seq(b1, b2)) | (Node::Par(a1, a2), Node::Par(b1, b2)) => {
            nodes_equal(a1, b1) && nodes_equal(a2, b2)
        }
        _ => false,
    }
}

fn generators_bit_equal(a: &Generator, b: &Generator) -> bool {
    use Generator::*;
    match (a, b) {
        (
            ZSpider {
                inputs: i1,
                outputs: o1,
                phase: p1,
            },
            ZSpider {
                inputs: i2,
                outputs: o2,
                phase: p2,
            },
        ) => {
            i1 == i2
                && o1 == o2
                && p1.entries().len() == p2.entries().len()
                && p1.entries().iter().zip(p2.entries()).all(|(x, y)| {
                    x.re.to_bits() == y.re.to_bits() && x.im.to_bits() == y.im.to_bits()
                })
        }
        _ => a == b,
    }
}

fn hash_node<H: Hasher>(d: &Diagram, state: &mut H) {
    match d.node() {
        Node::Empty => 0u8.hash(state),
        Node::Leaf(g) => {
            1u8.hash(state);
            hash_generator(g, state);
        }
        Node::Seq(a, b) => {
            2u8.hash(state);
            hash_node(a, state);
            hash_node(b, state);
        }
        Node::Par(a, b) => {
            3u8.hash(state);
            hash_node(a, state);
            hash_node(b, state);
        }
    }
}

fn hash_generator<H: Hasher>(g: &Generator, state: &mut H) {
    use Generator::*;
    std::mem::discriminant(g).hash(state);
    match g {
        ZSpider {
            inputs,
            outputs,
            phase,
        } => {
            inputs.hash(state);
            outputs.hash(state);
            for z in phase.entries() {
                z.re.to_bits().hash(state);
                z.im.to_bits().hash(state);
            }
        }
        W { dim }
        | Braid { dim }
        | BraidInv { dim }
        | Identity { dim }
        | Cap { dim }
        | Cup { dim }
        | Hadamard { dim }
        | HadamardDagger { dim }
        | Triangle { dim }
        | TriangleInv { dim } => dim.hash(state),
        Swap { left, right } => {
            left.hash(state);
            right.hash(state);
        }
        Binder { s, t } | Splitter { s, t } => {
            s.hash(state);
            t.hash(state);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived;
    use crate::phase::PhaseVector;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(m: &ComplexMatrix, expected: &ComplexMatrix) {
        let dev = m.max_abs_diff(expected).expect("shape mismatch");
        assert!(dev <= 1e-9, "max deviation {dev}");
    }

    #[test]
    fn w_node_at_d2_is_the_qubit_w() {
        let m = generator_matrix(&Generator::W { dim: 2 });
        let mut expected = ComplexMatrix::zeros(4, 2);
        expected.set(0, 0, c(1.0, 0.0));
        expected.set(1, 1, c(1.0, 0.0));
        expected.set(2, 1, c(1.0, 0.0));
        assert_eq!(m, expected);
    }

    #[test]
    fn braid_at_d2() {
        let m = generator_matrix(&Generator::Braid { dim: 2 });
        // |00> -> |00>, |01> -> |10>, |10> -> |01>, |11> -> -|11>
        assert!((m.get(0, 0) - c(1.0, 0.0)).norm() < 1e-12);
        assert!((m.get(2, 1) - c(1.0, 0.0)).norm() < 1e-12);
        assert!((m.get(1, 2) - c(1.0, 0.0)).norm() < 1e-12);
        assert!((m.get(3, 3) - c(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn triangle_at_d3() {
        let m = generator_matrix(&Generator::Triangle { dim: 3 });
        let mut expected = ComplexMatrix::identity(3);
        expected.set(0, 1, c(1.0, 0.0));
        expected.set(0, 2, c(1.0, 0.0));
        assert_eq!(m, expected);
    }

    #[test]
    fn plain_spider_is_identity() {
        for d in [2, 3, 5] {
            let m = generator_matrix(&Generator::ZSpider {
                inputs: 1,
                outputs: 1,
                phase: PhaseVector::ones(d),
            });
            assert_eq!(m, ComplexMatrix::identity(d));
        }
    }

    #[test]
    fn cap_at_d3() {
        let m = generator_matrix(&Generator::Cap { dim: 3 });
        assert_eq!(m.rows(), 9);
        assert_eq!(m.cols(), 1);
        for r in 0..9 {
            let expect = if r % 4 == 0 { 1.0 } else { 0.0 };
            assert_eq!(m.get(r, 0), c(expect, 0.0));
        }
    }

    #[test]
    fn empty_diagram_is_scalar_one() {
        let m = interpret(&Diagram::empty()).unwrap();
        assert_eq!(m, ComplexMatrix::scalar(c(1.0, 0.0)));
    }

    #[test]
    fn snake_equation() {
        for d in 2..=5 {
            let id = Diagram::identity(d).unwrap();
            let left = Diagram::seq(
                Diagram::par(id.clone(), Diagram::cap(d).unwrap()),
                Diagram::par(Diagram::cup(d).unwrap(), id.clone()),
            )
            .unwrap();
            assert_close(&interpret(&left).unwrap(), &ComplexMatrix::identity(d));

            let right = Diagram::seq(
                Diagram::par(Diagram::cap(d).unwrap(), id.clone()),
                Diagram::par(id.clone(), Diagram::cup(d).unwrap()),
            )
            .unwrap();
            assert_close(&interpret(&right).unwrap(), &ComplexMatrix::identity(d));
        }
    }

    #[test]
    fn braid_inverse_composes_to_identity() {
        for d in 2..=5 {
            let composite =
                Diagram::seq(Diagram::braid(d).unwrap(), Diagram::braid_inv(d).unwrap()).unwrap();
            assert_close(
                &interpret(&composite).unwrap(),
                &ComplexMatrix::identity(d * d),
            );
        }
    }

    #[test]
    fn hadamard_times_dagger_is_d_identity() {
        for d in 2..=5 {
            let composite = Diagram::seq(
                Diagram::hadamard(d).unwrap(),
                Diagram::hadamard_dagger(d).unwrap(),
            )
            .unwrap();
            let mut expected = ComplexMatrix::zeros(d, d);
            for i in 0..d {
                expected.set(i, i, c(d as f64, 0.0));
            }
            assert_close(&interpret(&composite).unwrap(), &expected);
        }
    }

    #[test]
    fn derived_zw_closed_forms() {
        // <0|
        let codot = interpret(&derived::black_codot(3).unwrap()).unwrap();
        let mut expected = ComplexMatrix::zeros(1, 3);
        expected.set(0, 0, c(1.0, 0.0));
        assert_close(&codot, &expected);

        // |0>
        let dot = interpret(&derived::black_dot(3).unwrap()).unwrap();
        let mut expected = ComplexMatrix::zeros(3, 1);
        expected.set(0, 0, c(1.0, 0.0));
        assert_close(&dot, &expected);

        // down-W at d = 2: [[1,0,0,0],[0,1,1,0]]
        let dw = interpret(&derived::down_w(2).unwrap()).unwrap();
        let mut expected = ComplexMatrix::zeros(2, 4);
        expected.set(0, 0, c(1.0, 0.0));
        expected.set(1, 1, c(1.0, 0.0));
        expected.set(1, 2, c(1.0, 0.0));
        assert_close(&dw, &expected);

        // down white unit: sum_j <j|
        let dwu = interpret(&derived::down_white_unit(4).unwrap()).unwrap();
        let mut expected = ComplexMatrix::zeros(1, 4);
        for j in 0..4 {
            expected.set(0, j, c(1.0, 0.0));
        }
        assert_close(&dwu, &expected);

        // no-phase spider = spider with all-ones parameter
        let nophase = interpret(
            &derived::derived_zw(
                derived::DerivedZw::WhiteNoPhase {
                    inputs: 2,
                    outputs: 1,
                },
                4,
            )
            .unwrap(),
        )
        .unwrap();
        let ones = interpret(&Diagram::z_plain(2, 1, 4).unwrap()).unwrap();
        assert_close(&nophase, &ones);
    }

    /// Independent oracle for the black spider closed form.
    fn black_spider_oracle(m: usize, d: usize) -> ComplexMatrix {
        let rows = d.pow(m as u32);
        let mut out = ComplexMatrix::zeros(rows, d);
        out.set(0, 0, c(1.0, 0.0));
        for i in 1..d {
            for k in 0..m {
                // |0..0 i 0..0> with i in slot k (0-based from the left)
                let idx = i * d.pow((m - 1 - k) as u32);
                out.add_assign_entry(idx, i, c(1.0, 0.0));
            }
        }
        out
    }

    #[test]
    fn black_spiders_match_closed_form() {
        for d in [2, 3, 4] {
            for m in 1..=5 {
                let up = interpret(&derived::black_spider(m, d, derived::Orientation::Up).unwrap())
                    .unwrap();
                let oracle = black_spider_oracle(m, d);
                assert_eq!(up.max_abs_diff(&oracle), Some(0.0), "up m={m} d={d}");

                // Down spider is the transpose of the up spider.
                let down =
                    interpret(&derived::black_spider(m, d, derived::Orientation::Down).unwrap())
                        .unwrap();
                let mut transposed = ComplexMatrix::zeros(d, d.pow(m as u32));
                for r in 0..oracle.rows() {
                    for cidx in 0..oracle.cols() {
                        transposed.set(cidx, r, oracle.get(r, cidx));
                    }
                }
                let dev = down.max_abs_diff(&transposed).unwrap();
                assert!(dev <= 1e-9, "down m={m} d={d} dev={dev}");
            }
        }
    }

    #[test]
    fn black_spider_3_2_closed_form_entries() {
        // 8x2, ones at (000 -> col 0) and (100, 010, 001 -> col 1).
        let m = interpret(&derived::black_spider(3, 2, derived::Orientation::Up).unwrap()).unwrap();
        let mut expected = ComplexMatrix::zeros(8, 2);
        expected.set(0, 0, c(1.0, 0.0));
        expected.set(4, 1, c(1.0, 0.0));
        expected.set(2, 1, c(1.0, 0.0));
        expected.set(1, 1, c(1.0, 0.0));
        assert_close(&m, &expected);
    }

    #[test]
    fn x_spider_formula_examples() {
        // 1 -> 1 with j = 0 is the identity relation.
        assert_eq!(x_spider_formula(1, 1, 0, 2), ComplexMatrix::identity(2));

        // 2 inputs, 1 output, j = 0, d = 2: row 0 selects 00 and 11.
        let m = x_spider_formula(2, 1, 0, 2);
        assert_eq!(m.get(0, 0), c(1.0, 0.0));
        assert_eq!(m.get(0, 3), c(1.0, 0.0));
        assert_eq!(m.get(1, 1), c(1.0, 0.0));
        assert_eq!(m.get(1, 2), c(1.0, 0.0));
        assert_eq!(m.get(0, 1), c(0.0, 0.0));

        // 0 inputs, 1 output, j = 1, d = 3: the single ket with i + 1 = 0 mod 3.
        let m = x_spider_formula(0, 1, 1, 3);
        assert_eq!(m.get(0, 0), c(0.0, 0.0));
        assert_eq!(m.get(1, 0), c(0.0, 0.0));
        assert_eq!(m.get(2, 0), c(1.0, 0.0));
    }

    #[test]
    fn x_spider_diagram_matches_formula() {
        for d in [2, 3, 4] {
            for (n, m) in [(0, 1), (1, 1), (2, 1), (1, 2), (2, 2)] {
                for j in 0..d {
                    let diagram = derived::x_spider(n, m, j, d).unwrap();
                    let got = interpret(&diagram).unwrap();
                    let oracle = x_spider_formula(n, m, j, d);
                    let dev = got.max_abs_diff(&oracle).unwrap();
                    assert!(dev <= 1e-9, "n={n} m={m} j={j} d={d}: dev {dev}");
                }
            }
        }
    }

    #[test]
    fn red_tau_diagram_matches_formula() {
        for d in 2..=5 {
            let got = interpret(&derived::red_tau(d).unwrap()).unwrap();
            let oracle = red_tau_formula(d);
            let dev = got.max_abs_diff(&oracle).unwrap();
            assert!(dev <= 1e-9, "d={d}: dev {dev}");
        }
    }

    #[test]
    fn red_tau_diagonal_at_d2() {
        let m = red_tau_formula(2);
        let expected = (c(1.0, 0.0) + Complex64::from_polar(1.0, 1.5 * PI)) / 2.0;
        assert!((m.get(0, 0) - expected).norm() < 1e-12);
        assert!((m.get(1, 1) - expected).norm() < 1e-12);
    }

    #[test]
    fn red_tau_is_unitary() {
        for d in 2..=5 {
            let m = red_tau_formula(d);
            for col in 0..d {
                let norm: f64 = (0..d).map(|r| m.get(r, col).norm_sqr()).sum();
                assert!((norm - 1.0).abs() < 1e-9, "d={d} col={col} norm {norm}");
            }
        }
    }

    #[test]
    fn entry_limit_guards_interpretation() {
        let big = Diagram::identities(10, 7).unwrap(); // 10^7 entries rows alone
        match interpret(&big) {
            Err(Error::MatrixTooLarge { .. }) => {}
            other => panic!("expected size guard, got {other:?}"),
        }
        assert!(interpret_with_limit(&Diagram::identities(10, 3).unwrap(), 10_000_000).is_ok());
    }

    #[test]
    fn scalar_loop_value() {
        for d in 2..=5 {
            let loop_d = derived::inverse_dim_scalar(d).unwrap();
            let m = interpret(&loop_d).unwrap();
            assert!((m.get(0, 0) - c(1.0 / d as f64, 0.0)).norm() < 1e-12);
        }
    }
}
