use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An integer combination of basis elements, as `(basis index, coefficient)` pairs.
pub type Combination = Vec<(usize, i64)>;

/// Where a basis element lives relative to the distinguished idempotents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// The idempotent of vertex `vertex`.
    Idempotent { vertex: usize },
    /// A basis element of the ideal `J`, with `e_target · b = b = b · e_source`.
    Arrow { source: usize, target: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A failed invariant of an [`AlgebraPresentation`], with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    Malformed(String),
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
    },
    NotOrthogonal {
        i: usize,
        j: usize,
    },
    UnitNotSumOfIdempotents {
        basis: usize,
        side: Side,
    },
    NotGraded {
        basis: usize,
        side: Side,
    },
    IdealNotClosed {
        i: usize,
        j: usize,
        idempotent: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Malformed(msg) => write!(f, "malformed presentation: {msg}"),
            Violation::NotAssociative { i, j, k } => {
                write!(f, "(b{i} b{j}) b{k} != b{i} (b{j} b{k})")
            }
            Violation::NotOrthogonal { i, j } => {
                write!(f, "idempotents b{i}, b{j} are not orthogonal")
            }
            Violation::UnitNotSumOfIdempotents { basis, side } => write!(
                f,
                "sum of idempotents is not a {} unit on b{basis}",
                if *side == Side::Left { "left" } else { "right" }
            ),
            Violation::NotGraded { basis, side } => write!(
                f,
                "b{basis} is not fixed by its {} idempotent",
                if *side == Side::Left {
                    "target"
                } else {
                    "source"
                }
            ),
            Violation::IdealNotClosed { i, j, idempotent } => write!(
                f,
                "b{i} b{j} has a component on idempotent b{idempotent}, so J is not an ideal"
            ),
        }
    }
}

/// A finite-dimensional algebra given by structure constants, with a complete
/// set of orthogonal idempotents `e_0, ..., e_{m-1}` among its basis vectors
/// and every other basis vector graded by a `(source, target)` pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    labels: Vec<String>,
    // table[i][j] = b_i · b_j
    table: Vec<Vec<Combination>>,
    idempotents: Vec<usize>,
    kinds: Vec<BasisKind>,
}

impl AlgebraPresentation {
    /// Checks the shape of the data (sizes, index ranges, a grading for every
    /// non-idempotent) but not the algebraic invariants; see [`validate`](Self::validate).
    pub fn new(
        labels: Vec<String>,
        table: Vec<Vec<Combination>>,
        idempotents: Vec<usize>,
        source: &BTreeMap<usize, usize>,
        target: &BTreeMap<usize, usize>,
    ) -> Result<Self> {
        let malformed = |msg: String| Error::InvalidPresentation(vec![Violation::Malformed(msg)]);
        let d = labels.len();
        if d == 0 {
            return Err(malformed("empty basis".into()));
        }
        if table.len() != d || table.iter().any(|row| row.len() != d) {
            return Err(malformed(format!("product table must be {d} x {d}")));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if let Some((k, _)) = entry.iter().find(|(k, _)| *k >= d) {
                    return Err(malformed(format!(
                        "b{i} b{j} refers to missing basis element {k}"
                    )));
                }
            }
        }
        if idempotents.is_empty() {
            return Err(malformed("no idempotents".into()));
        }
        let mut kinds: Vec<Option<BasisKind>> = vec![None; d];
        for (vertex, &b) in idempotents.iter().enumerate() {
            if b >= d || kinds[b].is_some() {
                return Err(malformed(format!("bad idempotent index {b}")));
            }
            kinds[b] = Some(BasisKind::Idempotent { vertex });
        }
        let vertices = idempotents.len();
        for (b, kind) in kinds.iter_mut().enumerate() {
            let graded = (source.get(&b), target.get(&b));
            match (*kind, graded) {
                (Some(_), (None, None)) => {}
                (Some(_), _) => {
                    return Err(malformed(format!(
                        "idempotent b{b} must not have source/target"
                    )))
                }
                (None, (Some(&s), Some(&t))) if s < vertices && t < vertices => {
                    *kind = Some(BasisKind::Arrow {
                        source: s,
                        target: t,
                    });
                }
                (None, _) => {
                    return Err(malformed(format!(
                        "b{b} needs source and target vertices in 0..{vertices}"
                    )))
                }
            }
        }
        for key in source.keys().chain(target.keys()) {
            if *key >= d {
                return Err(malformed(format!(
                    "source/target given for missing basis element {key}"
                )));
            }
        }
        let mut table = table;
        for row in &mut table {
            for entry in row.iter_mut() {
                *entry = normalize(core::mem::take(entry));
            }
        }
        Ok(Self {
            labels,
            table,
            idempotents,
            kinds: kinds.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn kind(&self, b: usize) -> BasisKind {
        self.kinds[b]
    }

    /// `(target, source)` vertices of a basis element; idempotents sit at `(v, v)`.
    pub fn endpoints(&self, b: usize) -> (usize, usize) {
        match self.kinds[b] {
            BasisKind::Idempotent { vertex } => (vertex, vertex),
            BasisKind::Arrow { source, target } => (target, source),
        }
    }

    /// Basis elements of `J`, in index order.
    pub fn arrows(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| matches!(self.kinds[b], BasisKind::Arrow { .. }))
            .collect()
    }

    /// `b_i · b_j`.
    pub fn product(&self, i: usize, j: usize) -> &Combination {
        &self.table[i][j]
    }

    /// Raw `source`/`target` maps, keyed by basis index.
    pub fn grading_maps(&self) -> (BTreeMap<usize, usize>, BTreeMap<usize, usize>) {
        let mut source = BTreeMap::new();
        let mut target = BTreeMap::new();
        for (b, kind) in self.kinds.iter().enumerate() {
            if let BasisKind::Arrow {
                source: s,
                target: t,
            } = kind
            {
                source.insert(b, *s);
                target.insert(b, *t);
            }
        }
        (source, target)
    }

    /// Product of two dense coordinate vectors.
    pub fn multiply(&self, x: &[i128], y: &[i128]) -> Vec<i128> {
        let mut out = vec![0i128; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                for &(k, c) in &self.table[i][j] {
                    out[k] += a * b * c as i128;
                }
            }
        }
        out
    }

    fn unit_vector(&self, b: usize) -> Vec<i128> {
        let mut v = vec![0; self.dim()];
        v[b] = 1;
        v
    }

    /// Checks associativity, orthogonality and completeness of the
    /// idempotents, the grading, and that `J` is an ideal. Exhaustive over
    /// all basis pairs and triples.
    pub fn validate(&self) -> core::result::Result<(), Vec<Violation>> {
        let d = self.dim();
        let mut violations = Vec::new();
        let basis: Vec<Vec<i128>> = (0..d).map(|b| self.unit_vector(b)).collect();

        for (vi, &i) in self.idempotents.iter().enumerate() {
            for (vj, &j) in self.idempotents.iter().enumerate() {
                let expected = if vi == vj {
                    basis[i].clone()
                } else {
                    vec![0; d]
                };
                if self.multiply(&basis[i], &basis[j]) != expected {
                    violations.push(Violation::NotOrthogonal { i, j });
                }
            }
        }

        let mut unit = vec![0i128; d];
        for &e in &self.idempotents {
            unit[e] = 1;
        }
        for b in 0..d {
            if self.multiply(&unit, &basis[b]) != basis[b] {
                violations.push(Violation::UnitNotSumOfIdempotents {
                    basis: b,
                    side: Side::Left,
                });
            }
            if self.multiply(&basis[b], &unit) != basis[b] {
                violations.push(Violation::UnitNotSumOfIdempotents {
                    basis: b,
                    side: Side::Right,
                });
            }
            if let BasisKind::Arrow { source, target } = self.kinds[b] {
                let e_t = &basis[self.idempotents[target]];
                let e_s = &basis[self.idempotents[source]];
                if self.multiply(e_t, &basis[b]) != basis[b] {
                    violations.push(Violation::NotGraded {
                        basis: b,
                        side: Side::Left,
                    });
                }
                if self.multiply(&basis[b], e_s) != basis[b] {
                    violations.push(Violation::NotGraded {
                        basis: b,
                        side: Side::Right,
                    });
                }
            }
        }

        for i in 0..d {
            for j in 0..d {
                let ij = self.multiply(&basis[i], &basis[j]);
                for k in 0..d {
                    let left = self.multiply(&ij, &basis[k]);
                    let right = self.multiply(&basis[i], &self.multiply(&basis[j], &basis[k]));
                    if left != right {
                        violations.push(Violation::NotAssociative { i, j, k });
                    }
                }
            }
        }

        let in_ideal = |b: usize| matches!(self.kinds[b], BasisKind::Arrow { .. });
        for i in 0..d {
            for j in 0..d {
                if !in_ideal(i) && !in_ideal(j) {
                    continue;
                }
                for &(k, c) in &self.table[i][j] {
                    if c != 0 && !in_ideal(k) {
                        violations.push(Violation::IdealNotClosed {
                            i,
                            j,
                            idempotent: k,
                        });
                    }
                }
            }
        }

        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// Fails with [`Error::InvalidPresentation`] unless [`validate`](Self::validate) passes.
    pub fn validated(self) -> Result<Self> {
        self.validate().map_err(Error::InvalidPresentation)?;
        Ok(self)
    }

    /// The same algebra with its basis relabelled: new element `k` is old
    /// element `order[k]`.
    pub fn permute_basis(&self, order: &[usize]) -> Result<Self> {
        let d = self.dim();
        let mut position = vec![usize::MAX; d];
        for (new, &old) in order.iter().enumerate() {
            if old >= d || position[old] != usize::MAX {
                return Err(Error::invalid("basis reordering is not a permutation"));
            }
            position[old] = new;
        }
        if order.len() != d {
            return Err(Error::invalid("basis reordering is not a permutation"));
        }
        let labels = order.iter().map(|&old| self.labels[old].clone()).collect();
        let table = order
            .iter()
            .map(|&i| {
                order
                    .iter()
                    .map(|&j| {
                        self.table[i][j]
                            .iter()
                            .map(|&(k, c)| (position[k], c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let idempotents = self.idempotents.iter().map(|&e| position[e]).collect();
        let (source, target) = self.grading_maps();
        let remap = |m: BTreeMap<usize, usize>| -> BTreeMap<usize, usize> {
            m.into_iter().map(|(b, v)| (position[b], v)).collect()
        };
        Self::new(labels, table, idempotents, &remap(source), &remap(target))
    }
}

// merge repeated indices, drop zeros, sort
fn normalize(entry: Combination) -> Combination {
    let mut merged: BTreeMap<usize, i64> = BTreeMap::new();
    for (k, c) in entry {
        *merged.entry(k).or_default() += c;
    }
    merged.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 3] = ["ground-field", "semisimple-2", "sl2-catO"];

/// Built-in presentations.
///
/// `sl2-catO` is the endomorphism algebra of the minimal projective generator
/// of the principal block of category O for `sl_2`: basis `e1, e2, a, b, c`
/// with `a: 1 → 2`, `b: 2 → 1`, `c` a loop at 2, `a·b = c` and `b·a = 0`.
pub fn builtin(name: &str) -> Result<AlgebraPresentation> {
    let labels = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let empty = BTreeMap::new();
    match name {
        "ground-field" => AlgebraPresentation::new(
            labels(&["e1"]),
            vec![vec![vec![(0, 1)]]],
            vec![0],
            &empty,
            &empty,
        ),
        "semisimple-2" => AlgebraPresentation::new(
            labels(&["e1", "e2"]),
            vec![vec![vec![(0, 1)], vec![]], vec![vec![], vec![(1, 1)]]],
            vec![0, 1],
            &empty,
            &empty,
        ),
        "sl2-catO" => {
            const E1: usize = 0;
            const E2: usize = 1;
            const A: usize = 2;
            const B: usize = 3;
            const C: usize = 4;
            let mut table = vec![vec![Vec::new(); 5]; 5];
            for (i, j, k) in [
                (E1, E1, E1),
                (E2, E2, E2),
                (E2, A, A),
                (A, E1, A),
                (E1, B, B),
                (B, E2, B),
                (E2, C, C),
                (C, E2, C),
                (A, B, C),
            ] {
                table[i][j] = vec![(k, 1)];
            }
            let source = [(A, 0), (B, 1), (C, 1)].into_iter().collect();
            let target = [(A, 1), (B, 0), (C, 1)].into_iter().collect();
            AlgebraPresentation::new(
                labels(&["e1", "e2", "a", "b", "c"]),
                table,
                vec![E1, E2],
                &source,
                &target,
            )
        }
        other => Err(Error::invalid(format!(
            "unknown builtin algebra {other:?}; known: {}",
            BUILTIN_NAMES.join(", ")
        ))),
    }
}
