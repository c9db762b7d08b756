//! Immutable term representation of ZW, ZX and qufinite diagrams.
//!
//! A diagram is a tree of generators combined by sequential (`seq`, read
//! top to bottom) and parallel (`par`, left to right) composition. Every
//! wire carries its own dimension, so mixed-dimension diagrams use the
//! same representation as single-dimension ones.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::phase::PhaseVector;

/// Ordered wire dimensions on one boundary of a diagram. The empty
/// signature is the 0-wire (scalar) boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WireSignature(Vec<usize>);

impl WireSignature {
    pub fn new(dims: Vec<usize>) -> Self {
        debug_assert!(dims.iter().all(|&d| d >= 1));
        WireSignature(dims)
    }

    pub fn empty() -> Self {
        WireSignature(Vec::new())
    }

    /// `count` wires all of dimension `dim`.
    pub fn uniform(dim: usize, count: usize) -> Self {
        WireSignature(vec![dim; count])
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of the wire dimensions: the size of the underlying space.
    pub fn space_dim(&self) -> usize {
        self.0.iter().product()
    }

    pub fn concat(&self, other: &WireSignature) -> WireSignature {
        let mut dims = self.0.clone();
        dims.extend_from_slice(&other.0);
        WireSignature(dims)
    }

    /// Signature with dimension-1 wires removed. Two boundaries that agree
    /// up to invisible 1-wires carry the same space.
    pub fn strip_units(&self) -> WireSignature {
        WireSignature(self.0.iter().copied().filter(|&d| d != 1).collect())
    }
}

impl fmt::Display for WireSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// The generators of the ZW and ZX calculi plus the two qufinite
/// dimension converters. Wire dimensions are carried inline.
#[derive(Debug, Clone, PartialEq)]
pub enum Generator {
    /// Z spider (white/green node): `inputs -> outputs`, interpretation
    /// `sum_j a_j |j..j><j..j|` with `a_0 = 1`.
    ZSpider {
        inputs: usize,
        outputs: usize,
        phase: PhaseVector,
    },
    /// Black W node, `1 -> 2`: `|00><0| + sum_i (|0i> + |i0>)<i|`.
    W {
        dim: usize,
    },
    /// Braiding `tau`, `2 -> 2`: `sum xi^{jk} |jk><kj|`.
    Braid {
        dim: usize,
    },
    /// Inverse braiding, `sum conj(xi)^{jk} |jk><kj|`.
    BraidInv {
        dim: usize,
    },
    Identity {
        dim: usize,
    },
    /// Symmetry; the two wires may carry different dimensions.
    Swap {
        left: usize,
        right: usize,
    },
    /// `0 -> 2`, `sum_j |jj>`.
    Cap {
        dim: usize,
    },
    /// `2 -> 0`, `sum_j <jj|`.
    Cup {
        dim: usize,
    },
    /// `sum_{j,k} xi^{jk} |j><k|` (no normalisation).
    Hadamard {
        dim: usize,
    },
    HadamardDagger {
        dim: usize,
    },
    /// `I_d + sum_{i>=1} |0><i|`.
    Triangle {
        dim: usize,
    },
    TriangleInv {
        dim: usize,
    },
    /// Reindexes a pair of wires of dimensions `s`, `t` as one wire of
    /// dimension `s*t`: `sum |k*t+l><k,l|`.
    Binder {
        s: usize,
        t: usize,
    },
    /// Inverse reindexing: `sum |floor(k/t), k mod t><k|`.
    Splitter {
        s: usize,
        t: usize,
    },
}

impl Generator {
    /// Short name used in error messages and reports.
    pub fn name(&self) -> &'static str {
        match self {
            Generator::ZSpider { .. } => "z-spider",
            Generator::W { .. } => "w",
            Generator::Braid { .. } => "tau",
            Generator::BraidInv { .. } => "tau-inverse",
            Generator::Identity { .. } => "identity",
            Generator::Swap { .. } => "swap",
            Generator::Cap { .. } => "cap",
            Generator::Cup { .. } => "cup",
            Generator::Hadamard { .. } => "hadamard",
            Generator::HadamardDagger { .. } => "hadamard-dagger",
            Generator::Triangle { .. } => "triangle",
            Generator::TriangleInv { .. } => "triangle-inverse",
            Generator::Binder { .. } => "binder",
            Generator::Splitter { .. } => "splitter",
        }
    }

    fn validate(&self) -> Result<()> {
        let check = |name, min, dim| {
            if dim < min {
                Err(Error::DimensionTooSmall { name, min, dim })
            } else {
                Ok(())
            }
        };
        match self {
            // Spiders exist at every dimension >= 1; the qufinite rules
            // instantiate them on 1-wires.
            Generator::ZSpider { .. } => Ok(()),
            Generator::W { dim } => check("w", 2, *dim),
            Generator::Braid { dim } => check("tau", 2, *dim),
            Generator::BraidInv { dim } => check("tau-inverse", 2, *dim),
            Generator::Hadamard { dim } => check("hadamard", 2, *dim),
            Generator::HadamardDagger { dim } => check("hadamard-dagger", 2, *dim),
            Generator::Triangle { dim } => check("triangle", 2, *dim),
            Generator::TriangleInv { dim } => check("triangle-inverse", 2, *dim),
            Generator::Identity { dim } => check("identity", 1, *dim),
            Generator::Cap { dim } => check("cap", 1, *dim),
            Generator::Cup { dim } => check("cup", 1, *dim),
            Generator::Swap { left, right } => {
                check("swap", 1, *left)?;
                check("swap", 1, *right)
            }
            Generator::Binder { s, t } => {
                check("binder", 1, *s)?;
                check("binder", 1, *t)
            }
            Generator::Splitter { s, t } => {
                check("splitter", 1, *s)?;
                check("splitter", 1, *t)
            }
        }
    }

    pub fn signature(&self) -> (WireSignature, WireSignature) {
        use WireSignature as Sig;
        match self {
            Generator::ZSpider {
                inputs,
                outputs,
                phase,
            } => {
                let d = phase.dim();
                (Sig::uniform(d, *inputs), Sig::uniform(d, *outputs))
            }
            Generator::W { dim } => (Sig::uniform(*dim, 1), Sig::uniform(*dim, 2)),
            Generator::Braid { dim } | Generator::BraidInv { dim } => {
                (Sig::uniform(*dim, 2), Sig::uniform(*dim, 2))
            }
            Generator::Identity { dim } => (Sig::uniform(*dim, 1), Sig::uniform(*dim, 1)),
            Generator::Swap { left, right } => {
                (Sig::new(vec![*left, *right]), Sig::new(vec![*right, *left]))
            }
            Generator::Cap { dim } => (Sig::empty(), Sig::uniform(*dim, 2)),
            Generator::Cup { dim } => (Sig::uniform(*dim, 2), Sig::empty()),
            Generator::Hadamard { dim }
            | Generator::HadamardDagger { dim }
            | Generator::Triangle { dim }
            | Generator::TriangleInv { dim } => (Sig::uniform(*dim, 1), Sig::uniform(*dim, 1)),
            Generator::Binder { s, t } => (Sig::new(vec![*s, *t]), Sig::new(vec![s * t])),
            Generator::Splitter { s, t } => (Sig::new(vec![s * t]), Sig::new(vec![*s, *t])),
        }
    }

    /// True for the generators shared by the ZW and ZX calculi.
    pub fn is_common(&self) -> bool {
        matches!(
            self,
            Generator::ZSpider { .. }
                | Generator::Identity { .. }
                | Generator::Swap { .. }
                | Generator::Cap { .. }
                | Generator::Cup { .. }
        )
    }

    pub fn is_zw(&self) -> bool {
        self.is_common()
            || matches!(
                self,
                Generator::W { .. } | Generator::Braid { .. } | Generator::BraidInv { .. }
            )
    }

    pub fn is_zx(&self) -> bool {
        self.is_common()
            || matches!(
                self,
                Generator::Hadamard { .. }
                    | Generator::HadamardDagger { .. }
                    | Generator::Triangle { .. }
                    | Generator::TriangleInv { .. }
            )
    }
}

#[derive(Debug)]
pub(crate) enum Node {
    /// The empty diagram: the unit for both compositions, interpretation `[1]`.
    Empty,
    Leaf(Generator),
    Seq(Diagram, Diagram),
    Par(Diagram, Diagram),
}

/// An immutable, cheaply clonable diagram with cached boundary signatures.
#[derive(Clone)]
pub struct Diagram {
    node: Arc<Node>,
    dom: WireSignature,
    cod: WireSignature,
}

impl Diagram {
    /// The empty (0 -> 0) diagram.
    pub fn empty() -> Diagram {
        Diagram {
            node: Arc::new(Node::Empty),
            dom: WireSignature::empty(),
            cod: WireSignature::empty(),
        }
    }

    /// Wrap a single generator as a diagram, validating its dimensions.
    pub fn generator(gen: Generator) -> Result<Diagram> {
        gen.validate()?;
        let (dom, cod) = gen.signature();
        Ok(Diagram {
            node: Arc::new(Node::Leaf(gen)),
            dom,
            cod,
        })
    }

    /// Like [`Diagram::generator`], additionally checking that the
    /// generator lives at wire dimension `d`. For spiders this verifies the
    /// phase-vector length (`d - 1` entries); binder and splitter carry two
    /// dimensions of their own and are accepted as-is.
    pub fn generator_at(gen: Generator, d: usize) -> Result<Diagram> {
        match &gen {
            Generator::ZSpider { phase, .. } => {
                if phase.dim() != d {
                    return Err(Error::PhaseLength {
                        dim: d,
                        got: phase.entries().len(),
                    });
                }
            }
            Generator::W { dim }
            | Generator::Braid { dim }
            | Generator::BraidInv { dim }
            | Generator::Identity { dim }
            | Generator::Cap { dim }
            | Generator::Cup { dim }
            | Generator::Hadamard { dim }
            | Generator::HadamardDagger { dim }
            | Generator::Triangle { dim }
            | Generator::TriangleInv { dim } => {
                if *dim != d {
                    return Err(Error::DimensionTooSmall {
                        name: gen.name(),
                        min: d,
                        dim: *dim,
                    });
                }
            }
            Generator::Swap { left, right } => {
                if *left != d || *right != d {
                    return Err(Error::MixedDimensions(*left, *right));
                }
            }
            Generator::Binder { .. } | Generator::Splitter { .. } => {}
        }
        Diagram::generator(gen)
    }

    /// Sequential composition: `a` above `b`; requires `cod(a) = dom(b)`.
    pub fn seq(a: Diagram, b: Diagram) -> Result<Diagram> {
        if a.cod != b.dom {
            return Err(Error::SeqMismatch {
                upper: a.cod.clone(),
                lower: b.dom.clone(),
            });
        }
        let dom = a.dom.clone();
        let cod = b.cod.clone();
        Ok(Diagram {
            node: Arc::new(Node::Seq(a, b)),
            dom,
            cod,
        })
    }

    /// Parallel (side-by-side) composition; signatures concatenate.
    pub fn par(a: Diagram, b: Diagram) -> Diagram {
        let dom = a.dom.concat(&b.dom);
        let cod = a.cod.concat(&b.cod);
        Diagram {
            node: Arc::new(Node::Par(a, b)),
            dom,
            cod,
        }
    }

    /// Fold a row of diagrams left to right with `par`. Empty input gives
    /// the empty diagram.
    pub fn row(parts: impl IntoIterator<Item = Diagram>) -> Diagram {
        let mut iter = parts.into_iter();
        match iter.next() {
            None => Diagram::empty(),
            Some(first) => iter.fold(first, Diagram::par),
        }
    }

    /// Fold a column of diagrams top to bottom with `seq`.
    pub fn column(parts: impl IntoIterator<Item = Diagram>) -> Result<Diagram> {
        let mut iter = parts.into_iter();
        let mut acc = match iter.next() {
            None => return Ok(Diagram::empty()),
            Some(first) => first,
        };
        for next in iter {
            acc = Diagram::seq(acc, next)?;
        }
        Ok(acc)
    }

    pub fn dom(&self) -> &WireSignature {
        &self.dom
    }

    pub fn cod(&self) -> &WireSignature {
        &self.cod
    }

    pub(crate) fn node(&self) -> &Node {
        &self.node
    }

    /// The generator, if this diagram is a single leaf.
    pub fn as_leaf(&self) -> Option<&Generator> {
        match self.node() {
            Node::Leaf(g) => Some(g),
            _ => None,
        }
    }

    /// Apply `f` to every generator leaf, left to right, top to bottom.
    pub fn for_each_generator(&self, f: &mut impl FnMut(&Generator)) {
        match self.node() {
            Node::Empty => {}
            Node::Leaf(g) => f(g),
            Node::Seq(a, b) | Node::Par(a, b) => {
                a.for_each_generator(f);
                b.for_each_generator(f);
            }
        }
    }

    /// Number of generator leaves (the empty diagram has none).
    pub fn generator_count(&self) -> usize {
        let mut n = 0;
        self.for_each_generator(&mut |_| n += 1);
        n
    }

    /// True when every generator belongs to the ZW calculus.
    pub fn is_zw(&self) -> bool {
        let mut ok = true;
        self.for_each_generator(&mut |g| ok &= g.is_zw());
        ok
    }

    /// True when every generator belongs to the ZX calculus.
    pub fn is_zx(&self) -> bool {
        let mut ok = true;
        self.for_each_generator(&mut |g| ok &= g.is_zx());
        ok
    }

    /// Structural equality modulo `seq`/`par` associativity and the
    /// empty-diagram units; phases are compared exactly.
    pub fn equal_structural(&self, other: &Diagram) -> bool {
        canonical(self) == canonical(other)
    }

    // ---- generator shorthands -------------------------------------------

    pub fn z_spider(inputs: usize, outputs: usize, phase: PhaseVector) -> Result<Diagram> {
        Diagram::generator(Generator::ZSpider {
            inputs,
            outputs,
            phase,
        })
    }

    /// Z spider with the no-phase parameter `(1,...,1)`.
    pub fn z_plain(inputs: usize, outputs: usize, dim: usize) -> Result<Diagram> {
        Diagram::z_spider(inputs, outputs, PhaseVector::ones(dim))
    }

    pub fn w(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::W { dim })
    }

    pub fn braid(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Braid { dim })
    }

    pub fn braid_inv(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::BraidInv { dim })
    }

    pub fn identity(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Identity { dim })
    }

    /// `count` parallel identity wires of dimension `dim`.
    pub fn identities(dim: usize, count: usize) -> Result<Diagram> {
        let id = Diagram::identity(dim)?;
        Ok(Diagram::row((0..count).map(|_| id.clone())))
    }

    pub fn swap(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Swap {
            left: dim,
            right: dim,
        })
    }

    pub fn swap_mixed(left: usize, right: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Swap { left, right })
    }

    pub fn cap(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Cap { dim })
    }

    pub fn cup(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Cup { dim })
    }

    pub fn hadamard(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Hadamard { dim })
    }

    pub fn hadamard_dagger(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::HadamardDagger { dim })
    }

    pub fn triangle(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Triangle { dim })
    }

    pub fn triangle_inv(dim: usize) -> Result<Diagram> {
        Diagram::generator(Generator::TriangleInv { dim })
    }

    pub fn binder(s: usize, t: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Binder { s, t })
    }

    pub fn splitter(s: usize, t: usize) -> Result<Diagram> {
        Diagram::generator(Generator::Splitter { s, t })
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Empty => write!(f, "Empty"),
            Node::Leaf(g) => write!(f, "{g:?}"),
            Node::Seq(a, b) => f.debug_tuple("Seq").field(a).field(b).finish(),
            Node::Par(a, b) => f.debug_tuple("Par").field(a).field(b).finish(),
        }
    }
}

/// Canonical n-ary form: nested `seq`/`par` flattened, empty units removed.
#[derive(Debug, PartialEq)]
enum Canon {
    Empty,
    Leaf(Generator),
    Seq(Vec<Canon>),
    Par(Vec<Canon>),
}

fn canonical(d: &Diagram) -> Canon {
    match d.node() {
        Node::Empty => Canon::Empty,
        Node::Leaf(g) => Canon::Leaf(g.clone()),
        Node::Seq(a, b) => {
            let mut items = Vec::new();
            flatten_seq(a, &mut items);
            flatten_seq(b, &mut items);
            wrap(items, Canon::Seq)
        }
        Node::Par(a, b) => {
            let mut items = Vec::new();
            flatten_par(a, &mut items);
            flatten_par(b, &mut items);
            wrap(items, Canon::Par)
        }
    }
}

fn wrap(mut items: Vec<Canon>, ctor: fn(Vec<Canon>) -> Canon) -> Canon {
    match items.len() {
        0 => Canon::Empty,
        1 => items.pop().unwrap(),
        _ => ctor(items),
    }
}

fn flatten_seq(d: &Diagram, out: &mut Vec<Canon>) {
    match canonical(d) {
        Canon::Empty => {}
        Canon::Seq(items) => out.extend(items),
        other => out.push(other),
    }
}

fn flatten_par(d: &Diagram, out: &mut Vec<Canon>) {
    match canonical(d) {
        Canon::Empty => {}
        Canon::Par(items) => out.extend(items),
        other => out.push(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn generator_signatures() {
        let w = Diagram::w(2).unwrap();
        assert_eq!(w.dom(), &WireSignature::uniform(2, 1));
        assert_eq!(w.cod(), &WireSignature::uniform(2, 2));

        let phase = PhaseVector::new(vec![Complex64::new(0.0, 1.0), Complex64::new(-1.0, 0.0)]);
        let z = Diagram::z_spider(2, 3, phase).unwrap();
        assert_eq!(z.dom(), &WireSignature::uniform(3, 2));
        assert_eq!(z.cod(), &WireSignature::uniform(3, 3));
    }

    #[test]
    fn phase_length_fixes_dimension() {
        // A 1-entry phase vector lives at d = 2; requesting it at d = 3 is
        // the phase-length error.
        let one_entry = PhaseVector::new(vec![Complex64::new(5.0, 0.0)]);
        let z = Diagram::z_spider(1, 1, one_entry.clone()).unwrap();
        assert_eq!(z.dom(), &WireSignature::uniform(2, 1));

        let err = Diagram::generator_at(
            Generator::ZSpider {
                inputs: 1,
                outputs: 1,
                phase: one_entry,
            },
            3,
        )
        .unwrap_err();
        assert_eq!(err, Error::PhaseLength { dim: 3, got: 1 });

        let ok = Diagram::generator_at(Generator::W { dim: 2 }, 2).unwrap();
        assert_eq!(ok.cod(), &WireSignature::uniform(2, 2));
        assert!(Diagram::generator_at(Generator::W { dim: 2 }, 3).is_err());
    }

    #[test]
    fn qudit_generators_need_dim_two() {
        assert!(matches!(
            Diagram::w(1),
            Err(Error::DimensionTooSmall { min: 2, .. })
        ));
        assert!(Diagram::identity(1).is_ok());
        assert!(Diagram::identity(0).is_err());
        assert!(Diagram::binder(1, 4).is_ok());
    }

    #[test]
    fn seq_checks_signatures() {
        let w = Diagram::w(2).unwrap();
        let id = Diagram::identity(2).unwrap();
        let err = Diagram::seq(w.clone(), id.clone()).unwrap_err();
        match err {
            Error::SeqMismatch { upper, lower } => {
                assert_eq!(upper.len(), 2);
                assert_eq!(lower.len(), 1);
            }
            other => panic!("unexpected error {other:?}"),
        }
        let snake = Diagram::seq(
            Diagram::par(id.clone(), Diagram::cap(2).unwrap()),
            Diagram::par(Diagram::cup(2).unwrap(), id.clone()),
        )
        .unwrap();
        assert_eq!(snake.dom(), snake.cod());
    }

    #[test]
    fn par_concatenates_signatures() {
        let cap = Diagram::cap(2).unwrap();
        let cup = Diagram::cup(2).unwrap();
        let d = Diagram::par(cap, cup);
        assert_eq!(d.dom(), &WireSignature::uniform(2, 2));
        assert_eq!(d.cod(), &WireSignature::uniform(2, 2));
    }

    #[test]
    fn structural_equality_ignores_units_and_association() {
        let id = Diagram::identity(3).unwrap();
        let w = Diagram::w(3).unwrap();

        assert!(Diagram::par(Diagram::empty(), w.clone()).equal_structural(&w));
        assert!(Diagram::par(w.clone(), Diagram::empty()).equal_structural(&w));

        let left = Diagram::par(Diagram::par(id.clone(), w.clone()), id.clone());
        let right = Diagram::par(id.clone(), Diagram::par(w.clone(), id.clone()));
        assert!(left.equal_structural(&right));

        let a = Diagram::seq(w.clone(), Diagram::par(id.clone(), id.clone())).unwrap();
        let b = Diagram::seq(w.clone(), Diagram::par(id.clone(), id.clone())).unwrap();
        let assoc_l = Diagram::seq(a, Diagram::identities(3, 2).unwrap()).unwrap();
        let assoc_r = Diagram::seq(
            w.clone(),
            Diagram::column([
                Diagram::identities(3, 2).unwrap(),
                Diagram::identities(3, 2).unwrap(),
            ])
            .unwrap(),
        )
        .unwrap();
        assert!(assoc_l.equal_structural(&assoc_r));
        assert!(b.equal_structural(&b.clone()));
    }

    #[test]
    fn plain_spider_is_not_identity_structurally() {
        let z = Diagram::z_plain(1, 1, 2).unwrap();
        let id = Diagram::identity(2).unwrap();
        assert!(!z.equal_structural(&id));
    }

    #[test]
    fn calculus_membership() {
        let zw = Diagram::seq(
            Diagram::w(2).unwrap(),
            Diagram::par(Diagram::identity(2).unwrap(), Diagram::identity(2).unwrap()),
        )
        .unwrap();
        assert!(zw.is_zw());
        assert!(!zw.is_zx());

        let zx = Diagram::hadamard(3).unwrap();
        assert!(zx.is_zx());
        assert!(!zx.is_zw());

        let common = Diagram::z_plain(1, 2, 2).unwrap();
        assert!(common.is_zw() && common.is_zx());
    }
}
