//! Finite symplectic and split orthogonal groups over `F_2`, their Borel and
//! parabolic subgroups, and the exact order/index bookkeeping behind the
//! Hecke parameters.
//!
//! Matrices are packed into a `u64` bitboard (row-major), which covers sizes
//! up to `8 x 8`, i.e. rank 4; the suites use rank at most 3.

use crate::chevalley::{chevalley_matrix, reduction_mod_2, Root};
use crate::cyclotomic::{rat, Rat};
use std::collections::HashSet;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FiniteError {
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureBudget(usize),
    #[error("index of a non-subgroup requested")]
    NotASubgroup,
    #[error("eigenvalue formula needs 0 < dim V < dim U, got U = {dim_u}, V = {dim_v}")]
    BadDimensions { dim_u: usize, dim_v: usize },
}

/// Hard cap on closure sizes; `Sp_6(F_2)` (order 1 451 520) fits well below.
pub const CLOSURE_CAP: usize = 10_000_000;

/// Square matrix over `F_2`, packed row-major into a bitboard.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitMatrix {
    size: u8,
    bits: u64,
}

impl BitMatrix {
    pub fn identity(size: usize) -> Self {
        assert!(size <= 8, "bitboard holds at most 8 x 8");
        let mut m = BitMatrix {
            size: size as u8,
            bits: 0,
        };
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.bits >> (r * self.size() + c)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let pos = r * self.size() + c;
        if v {
            self.bits |= 1 << pos;
        } else {
            self.bits &= !(1 << pos);
        }
    }

    fn row(&self, r: usize) -> u64 {
        let n = self.size();
        (self.bits >> (r * n)) & ((1 << n) - 1)
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        let n = self.size();
        assert_eq!(n, other.size());
        let mut out = BitMatrix {
            size: self.size,
            bits: 0,
        };
        for r in 0..n {
            let mut acc = 0u64;
            let row = self.row(r);
            for k in 0..n {
                if (row >> k) & 1 == 1 {
                    acc ^= other.row(k);
                }
            }
            out.bits |= acc << (r * n);
        }
        out
    }

    /// Apply to a column vector packed as bits.
    pub fn apply(&self, v: u64) -> u64 {
        let n = self.size();
        let mut out = 0u64;
        for r in 0..n {
            if (self.row(r) & v).count_ones() % 2 == 1 {
                out |= 1 << r;
            }
        }
        out
    }

    /// Reduction of an integral rational matrix mod 2.
    pub fn from_rational(m: &crate::matrix::RatMatrix) -> BitMatrix {
        let n = m.rows();
        assert!(n <= 8);
        let bits = reduction_mod_2(m);
        let mut out = BitMatrix {
            size: n as u8,
            bits: 0,
        };
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, bits[r * n + c]);
            }
        }
        out
    }

    /// Preserves the alternating form `sum x_i y'_i + y_i x'_i`.
    pub fn is_symplectic(&self) -> bool {
        let two_n = self.size();
        let n = two_n / 2;
        // pairing of basis vectors under the form
        let pair = |a: usize, b: usize| -> bool {
            (a < n && b == a + n) || (b < n && a == b + n)
        };
        for a in 0..two_n {
            for b in (a + 1)..two_n {
                let mut form = false;
                let va = self.apply(1 << a);
                let vb = self.apply(1 << b);
                for i in 0..n {
                    let x = (va >> i) & 1 == 1 && (vb >> (n + i)) & 1 == 1;
                    let y = (va >> (n + i)) & 1 == 1 && (vb >> i) & 1 == 1;
                    if x ^ y {
                        form = !form;
                    }
                }
                if form != pair(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Preserves the split quadratic form `q(x, y) = sum x_i y_i`.
    pub fn preserves_split_quadratic(&self) -> bool {
        let two_n = self.size();
        let n = two_n / 2;
        let q = |v: u64| -> bool {
            let mut acc = false;
            for i in 0..n {
                if (v >> i) & 1 == 1 && (v >> (n + i)) & 1 == 1 {
                    acc = !acc;
                }
            }
            acc
        };
        for v in 0..(1u64 << two_n) {
            if q(self.apply(v)) != q(v) {
                return false;
            }
        }
        true
    }
}

/// Named finite groups the suites enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// `Sp_2n(F_2)`; at n = 1 this is `SL_2(F_2)`.
    Symplectic,
    /// `O_2n(F_2)` for the split form, realized inside the symplectic group.
    Orthogonal,
    /// Borel of the symplectic group: closure of the positive root groups.
    Borel,
    /// Borel of the orthogonal group: closure of the positive short root
    /// groups.
    OrthogonalBorel,
    /// Parabolic of the orthogonal group obtained by adjoining the negative
    /// of the short simple root `a_i` to its Borel (1-based, `i < n`).
    OrthogonalParabolic(usize),
}

/// A finite matrix group with its full element set.
#[derive(Clone, Debug)]
pub struct FiniteSubgroup {
    generators: Vec<BitMatrix>,
    elements: Vec<BitMatrix>,
}

impl FiniteSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[BitMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[BitMatrix] {
        &self.elements
    }

    pub fn contains(&self, m: &BitMatrix) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &FiniteSubgroup) -> bool {
        self.elements.iter().all(|m| other.contains(m))
    }

    fn close(generators: Vec<BitMatrix>, size: usize) -> Result<FiniteSubgroup, FiniteError> {
        let identity = BitMatrix::identity(size);
        let mut seen: HashSet<BitMatrix> = HashSet::new();
        seen.insert(identity);
        let mut frontier = vec![identity];
        while let Some(m) = frontier.pop() {
            for g in &generators {
                let next = m.mul(g);
                if seen.insert(next) {
                    if seen.len() > CLOSURE_CAP {
                        return Err(FiniteError::ClosureBudget(CLOSURE_CAP));
                    }
                    frontier.push(next);
                }
            }
        }
        let mut elements: Vec<BitMatrix> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(FiniteSubgroup {
            generators,
            elements,
        })
    }
}

fn root_generators(n: usize, filter: impl Fn(Root) -> bool) -> Vec<BitMatrix> {
    Root::all(n)
        .into_iter()
        .filter(|r| filter(*r))
        .map(|r| BitMatrix::from_rational(&chevalley_matrix(r, &rat(1), n)))
        .collect()
}

/// Enumerate one of the named groups at rank `n` by closure from its
/// Chevalley generators reduced mod 2. Rank 0 groups are trivial.
pub fn enumerate_group(kind: GroupKind, n: usize) -> Result<FiniteSubgroup, FiniteError> {
    if n == 0 {
        return Ok(FiniteSubgroup {
            generators: Vec::new(),
            elements: vec![BitMatrix::identity(0)],
        });
    }
    assert!(n <= 3, "desk-scale ranks only");
    match kind {
        GroupKind::Symplectic => FiniteSubgroup::close(root_generators(n, |_| true), 2 * n),
        GroupKind::Orthogonal => {
            // realized as the q-preserving subset of the symplectic group
            let sp = enumerate_group(GroupKind::Symplectic, n)?;
            let elements: Vec<BitMatrix> = sp
                .elements
                .iter()
                .copied()
                .filter(|m| m.preserves_split_quadratic())
                .collect();
            Ok(FiniteSubgroup {
                generators: root_generators(n, |r| r.is_positive() && !r.is_long()),
                elements,
            })
        }
        GroupKind::Borel => FiniteSubgroup::close(root_generators(n, |r| r.is_positive()), 2 * n),
        GroupKind::OrthogonalBorel => FiniteSubgroup::close(
            root_generators(n, |r| r.is_positive() && !r.is_long()),
            2 * n,
        ),
        GroupKind::OrthogonalParabolic(i) => {
            assert!(i >= 1 && i < n, "short simple root index");
            let mut gens = root_generators(n, |r| r.is_positive() && !r.is_long());
            let neg_simple = Root::Diff { i: i + 1, j: i };
            gens.push(BitMatrix::from_rational(&chevalley_matrix(
                neg_simple,
                &rat(1),
                n,
            )));
            FiniteSubgroup::close(gens, 2 * n)
        }
    }
}

/// `|G| / |H|` with the subgroup relation verified.
pub fn index(g: &FiniteSubgroup, h: &FiniteSubgroup) -> Result<usize, FiniteError> {
    if !h.is_subgroup_of(g) {
        return Err(FiniteError::NotASubgroup);
    }
    assert_eq!(g.order() % h.order(), 0, "Lagrange violated");
    Ok(g.order() / h.order())
}

/// `dim U_0 = [J_0 : J]` via the volume-ratio product
/// `(|SL_2(F_2)| |B'_{2n-2}|) / (|B_2(F_2)| |B_{2n-2}|) * [I : J]`,
/// computed from enumerated orders. Equals 6 for every rank.
pub fn dim_u0(n: usize) -> Result<usize, FiniteError> {
    assert!(n >= 1, "rank at least 1");
    let sl2 = enumerate_group(GroupKind::Symplectic, 1)?.order();
    let b2 = enumerate_group(GroupKind::Borel, 1)?.order();
    let b_small = enumerate_group(GroupKind::Borel, n - 1)?.order();
    let bp_small = enumerate_group(GroupKind::OrthogonalBorel, n - 1)?.order();
    let b_full = enumerate_group(GroupKind::Borel, n)?.order();
    let bp_full = enumerate_group(GroupKind::OrthogonalBorel, n)?.order();
    let i_to_j = b_full / bp_full;
    let num = sl2 * bp_small * i_to_j;
    let den = b2 * b_small;
    assert_eq!(num % den, 0, "volume ratio must be integral");
    Ok(num / den)
}

/// The eigenvalue `lambda = (dim U - dim V) / dim V` of the nontrivial
/// double-coset element acting on the type; requires `0 < dim V < dim U`.
pub fn type_eigenvalue(dim_u: usize, dim_v: usize) -> Result<Rat, FiniteError> {
    if dim_v == 0 || dim_v >= dim_u {
        return Err(FiniteError::BadDimensions { dim_u, dim_v });
    }
    Ok(rat(dim_u as i64 - dim_v as i64) / rat(dim_v as i64))
}
