//! The Heisenberg group, its Schrödinger-model action, and the Weil-operator
//! compiler.
//!
//! Operators are words in six exact primitives (quadratic character
//! multiplication, linear substitution, partial/full Fourier transforms and
//! their inverses, scalars). Chevalley-generator letters compile to such
//! words: difference roots act by substitution, positive sum and long roots
//! by quadratic characters, and the remaining negative roots by conjugating
//! the positive operator with the full Fourier transform, matching
//! `w^-1 x_a(t) w = x_{-a}(-t)`.
//!
//! The normalisation fixes the scalars of the generator operators to 1. All
//! checks exposed here are either scalar-robust (line stabilisation,
//! dimension counts) or use words whose Fourier letters balance, so the
//! unspecified metaplectic roots of unity never enter an asserted value.

use crate::chevalley::{self, GroupWord, Letter, Root};
use crate::cyclotomic::{Cyclotomic, Rat};
use crate::matrix::RatMatrix;
use crate::schwartz::{CharacterData, SchwartzFunction};
use num_traits::{One, Zero};

#[derive(Debug, thiserror::Error)]
pub enum WeilError {
    #[error("operators are not proportional on the truncation")]
    NotProportional,
}

/// Element `(w, t)` of the Heisenberg group `W x F`, with `w = (x, y)` split
/// along the polarization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergElement {
    pub x: Vec<Rat>,
    pub y: Vec<Rat>,
    pub t: Rat,
}

impl HeisenbergElement {
    pub fn new(x: Vec<Rat>, y: Vec<Rat>, t: Rat) -> Self {
        assert_eq!(x.len(), y.len(), "polarization halves must match");
        HeisenbergElement { x, y, t }
    }

    pub fn central(n: usize, t: Rat) -> Self {
        HeisenbergElement::new(vec![Rat::zero(); n], vec![Rat::zero(); n], t)
    }

    pub fn dims(&self) -> usize {
        self.x.len()
    }

    /// The symplectic form `Q(u, v) = x_u . y_v - y_u . x_v`.
    pub fn symplectic_pairing(&self, other: &HeisenbergElement) -> Rat {
        let a: Rat = self
            .x
            .iter()
            .zip(other.y.iter())
            .map(|(p, q)| p * q)
            .sum();
        let b: Rat = self
            .y
            .iter()
            .zip(other.x.iter())
            .map(|(p, q)| p * q)
            .sum();
        a - b
    }

    pub fn inverse(&self) -> HeisenbergElement {
        HeisenbergElement {
            x: self.x.iter().map(|v| -v).collect(),
            y: self.y.iter().map(|v| -v).collect(),
            t: -self.t.clone(),
        }
    }

    /// Apply a linear symplectic matrix to the vector part, `g (v, t) =
    /// (g v, t)`.
    pub fn transform(&self, g: &RatMatrix) -> HeisenbergElement {
        let n = self.dims();
        assert_eq!(g.rows(), 2 * n, "matrix size mismatch");
        let mut stacked: Vec<Rat> = self.x.clone();
        stacked.extend(self.y.iter().cloned());
        let out = g.mul_vec(&stacked);
        HeisenbergElement {
            x: out[..n].to_vec(),
            y: out[n..].to_vec(),
            t: self.t.clone(),
        }
    }
}

/// `(u, s) (v, t) = (u + v, s + t + Q(u, v))`.
pub fn heisenberg_mul(a: &HeisenbergElement, b: &HeisenbergElement) -> HeisenbergElement {
    assert_eq!(a.dims(), b.dims(), "dimension mismatch");
    let q = a.symplectic_pairing(b);
    HeisenbergElement {
        x: a.x.iter().zip(b.x.iter()).map(|(p, r)| p + r).collect(),
        y: a.y.iter().zip(b.y.iter()).map(|(p, r)| p + r).collect(),
        t: &a.t + &b.t + q,
    }
}

/// The Schrödinger-model action of the Heisenberg group on `S(Y)`:
/// `rho(x + y, t) phi(y0) = psi(t - x.(y + 2 y0)) phi(y + y0)`.
pub fn rho_action(
    h: &HeisenbergElement,
    f: &SchwartzFunction,
    cd: &CharacterData,
) -> SchwartzFunction {
    assert_eq!(h.dims(), f.dims(), "dimension mismatch");
    let xy: Rat = h.x.iter().zip(h.y.iter()).map(|(p, q)| p * q).sum();
    let scalar = cd.psi().eval(&(&h.t - xy));
    let minus_two_x: Vec<Rat> = h.x.iter().map(|v| v * -Rat::from_integer(2.into())).collect();
    f.translate(&h.y)
        .mult_linear_character(&minus_two_x, cd)
        .scale(&scalar)
}

/// Primitive moves a Weil operator is composed of. A move list acts on a
/// function with the rightmost move applied first.
#[derive(Clone, Debug)]
pub enum Move {
    MultQuadratic(RatMatrix),
    Substitute(RatMatrix),
    PartialFourier(usize),
    FullFourier,
    InverseFullFourier,
    Scalar(Cyclotomic),
}

/// Compiled action of a group element on Schwartz functions.
#[derive(Clone, Debug)]
pub struct WeilOperator {
    dims: usize,
    cd: CharacterData,
    moves: Vec<Move>,
}

impl WeilOperator {
    pub fn identity(dims: usize, cd: CharacterData) -> Self {
        WeilOperator {
            dims,
            cd,
            moves: Vec::new(),
        }
    }

    pub fn from_moves(dims: usize, cd: CharacterData, moves: Vec<Move>) -> Self {
        WeilOperator { dims, cd, moves }
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// `self` after `other` (the operator of the product of the underlying
    /// group elements, `self` leftmost).
    pub fn compose(&self, other: &WeilOperator) -> WeilOperator {
        assert_eq!(self.dims, other.dims, "dimension mismatch");
        assert_eq!(self.cd, other.cd, "ambient character mismatch");
        let mut moves = self.moves.clone();
        moves.extend(other.moves.iter().cloned());
        WeilOperator {
            dims: self.dims,
            cd: self.cd.clone(),
            moves,
        }
    }

    pub fn inverse(&self) -> WeilOperator {
        let mut moves = Vec::with_capacity(self.moves.len());
        for mv in self.moves.iter().rev() {
            match mv {
                Move::MultQuadratic(b) => {
                    moves.push(Move::MultQuadratic(b.scale(&-Rat::one())));
                }
                Move::Substitute(b) => {
                    moves.push(Move::Substitute(b.inverse().expect("invertible move")));
                }
                Move::PartialFourier(i) => {
                    // inverse partial transform: reflect coordinate i, then
                    // transform it
                    let mut refl = RatMatrix::identity(self.dims);
                    refl[(*i, *i)] = -Rat::one();
                    moves.push(Move::Substitute(refl));
                    moves.push(Move::PartialFourier(*i));
                }
                Move::FullFourier => moves.push(Move::InverseFullFourier),
                Move::InverseFullFourier => moves.push(Move::FullFourier),
                Move::Scalar(c) => {
                    moves.push(Move::Scalar(c.checked_inv().expect("unit scalar")));
                }
            }
        }
        WeilOperator {
            dims: self.dims,
            cd: self.cd.clone(),
            moves,
        }
    }

    /// Insert `scalar` after every full Fourier move and its inverse after
    /// every inverse move; used to probe scalar-robustness of line checks.
    pub fn rescale_fourier(&self, scalar: &Cyclotomic) -> WeilOperator {
        let inv = scalar.checked_inv().expect("unit scalar");
        let mut moves = Vec::new();
        for mv in &self.moves {
            match mv {
                Move::FullFourier => {
                    moves.push(Move::Scalar(scalar.clone()));
                    moves.push(Move::FullFourier);
                }
                Move::InverseFullFourier => {
                    moves.push(Move::Scalar(inv.clone()));
                    moves.push(Move::InverseFullFourier);
                }
                other => moves.push(other.clone()),
            }
        }
        WeilOperator {
            dims: self.dims,
            cd: self.cd.clone(),
            moves,
        }
    }

    pub fn apply(&self, f: &SchwartzFunction) -> SchwartzFunction {
        assert_eq!(f.dims(), self.dims, "dimension mismatch");
        let mut g = f.clone();
        for mv in self.moves.iter().rev() {
            g = match mv {
                Move::MultQuadratic(b) => g.mult_quadratic_character(b, &self.cd),
                Move::Substitute(b) => g.substitute_linear(b),
                Move::PartialFourier(i) => g.fourier_partial(*i, &self.cd),
                Move::FullFourier => g.fourier_full(&self.cd),
                Move::InverseFullFourier => g.fourier_full(&self.cd).reflect(),
                Move::Scalar(c) => g.scale(c),
            };
        }
        g
    }
}

/// The generator families of the symplectic group in the Schrödinger model.
#[derive(Clone, Debug)]
pub enum Generator {
    /// Upper unipotent `x(b)` for symmetric `b`.
    UpperUnipotent(RatMatrix),
    /// Levi `h(b)` for invertible `b`.
    Levi(RatMatrix),
    /// The full Weyl element `w`.
    Fourier,
    /// `w_{2 l_i}(1)`, the partial transform in coordinate `i` (1-based).
    PartialFourier(usize),
}

impl Generator {
    /// The block matrix of the generator in `Sp_2n`.
    pub fn matrix(&self, n: usize) -> RatMatrix {
        match self {
            Generator::UpperUnipotent(b) => {
                assert_eq!(b, &b.transpose(), "x(b) needs symmetric b");
                let mut m = RatMatrix::identity(2 * n);
                for r in 0..n {
                    for c in 0..n {
                        m[(r, n + c)] = b[(r, c)].clone();
                    }
                }
                m
            }
            Generator::Levi(b) => {
                let binv_t = b
                    .inverse()
                    .expect("h(b) needs invertible b")
                    .transpose();
                let mut m = RatMatrix::zero(2 * n, 2 * n);
                for r in 0..n {
                    for c in 0..n {
                        m[(r, c)] = b[(r, c)].clone();
                        m[(n + r, n + c)] = binv_t[(r, c)].clone();
                    }
                }
                m
            }
            Generator::Fourier => {
                let mut m = RatMatrix::zero(2 * n, 2 * n);
                for i in 0..n {
                    m[(i, n + i)] = Rat::one();
                    m[(n + i, i)] = -Rat::one();
                }
                m
            }
            Generator::PartialFourier(i) => {
                let mut m = RatMatrix::identity(2 * n);
                let i = i - 1;
                m[(i, i)] = Rat::zero();
                m[(n + i, n + i)] = Rat::zero();
                m[(i, n + i)] = Rat::one();
                m[(n + i, i)] = -Rat::one();
                m
            }
        }
    }
}

/// The operator of a generator, with all normalisation scalars fixed to 1:
/// `x(b)` multiplies by `psi(y^T b y)`, `h(b)` substitutes `b^T y`, `w` is
/// the full Fourier transform.
pub fn weil_generator(g: &Generator, n: usize, cd: &CharacterData) -> WeilOperator {
    let mv = match g {
        Generator::UpperUnipotent(b) => {
            assert_eq!(b, &b.transpose(), "x(b) needs symmetric b");
            Move::MultQuadratic(b.clone())
        }
        Generator::Levi(b) => {
            assert!(b.inverse().is_some(), "h(b) needs invertible b");
            Move::Substitute(b.clone())
        }
        Generator::Fourier => Move::FullFourier,
        Generator::PartialFourier(i) => Move::PartialFourier(i - 1),
    };
    WeilOperator::from_moves(n, cd.clone(), vec![mv])
}

/// Compile one Chevalley letter into its Weil operator moves.
fn compile_letter(letter: &Letter, n: usize) -> Vec<Move> {
    let Letter { root, t } = letter;
    root.assert_rank(n);
    match *root {
        Root::Diff { i, j } => {
            // x_{l_i - l_j}(t) = h(1 + t E_ij)
            let mut b = RatMatrix::identity(n);
            b[(i - 1, j - 1)] = t.clone();
            vec![Move::Substitute(b)]
        }
        Root::Sum { i, j, neg: false } => {
            let mut b = RatMatrix::zero(n, n);
            b[(i - 1, j - 1)] = t.clone();
            b[(j - 1, i - 1)] = t.clone();
            vec![Move::MultQuadratic(b)]
        }
        Root::Long { i, neg: false } => {
            let mut b = RatMatrix::zero(n, n);
            b[(i - 1, i - 1)] = t.clone();
            vec![Move::MultQuadratic(b)]
        }
        // negative sum and long roots: x_{-a}(t) = w^-1 x_a(-t) w
        Root::Sum { i, j, neg: true } => {
            let mut b = RatMatrix::zero(n, n);
            b[(i - 1, j - 1)] = -t.clone();
            b[(j - 1, i - 1)] = -t.clone();
            vec![
                Move::InverseFullFourier,
                Move::MultQuadratic(b),
                Move::FullFourier,
            ]
        }
        Root::Long { i, neg: true } => {
            let mut b = RatMatrix::zero(n, n);
            b[(i - 1, i - 1)] = -t.clone();
            vec![
                Move::InverseFullFourier,
                Move::MultQuadratic(b),
                Move::FullFourier,
            ]
        }
    }
}

/// Compile a word in the Chevalley generators into its operator; letters
/// compose left to right, so the leftmost letter acts last.
pub fn compile_word(word: &GroupWord, n: usize, cd: &CharacterData) -> WeilOperator {
    let mut moves = Vec::new();
    for letter in word {
        moves.extend(compile_letter(letter, n));
    }
    WeilOperator::from_moves(n, cd.clone(), moves)
}

/// If `op(f) = c f`, return the scalar; `f` must be nonzero.
pub fn stabilizes_line(op: &WeilOperator, f: &SchwartzFunction) -> Option<Cyclotomic> {
    assert!(!f.is_zero(), "line of the zero vector");
    op.apply(f).proportionality(f)
}

/// Exact intertwining test `T(g) rho(h) = rho(g h) T(g)` for one generator,
/// one Heisenberg element, and one function.
pub fn intertwining_check(
    g: &Generator,
    h: &HeisenbergElement,
    f: &SchwartzFunction,
    cd: &CharacterData,
) -> bool {
    let n = h.dims();
    let op = weil_generator(g, n, cd);
    let lhs = op.apply(&rho_action(h, f, cd));
    let rhs = rho_action(&h.transform(&g.matrix(n)), &op.apply(f), cd);
    lhs == rhs
}

/// Indicator basis of the truncation box `p^-N Z_p^n / p^N Z_p^n`.
pub fn truncation_basis(prime: u32, dims: usize, depth: i64) -> Vec<SchwartzFunction> {
    crate::dyadic::coset_representatives(-depth, depth, prime, dims)
        .expect("valid truncation")
        .into_iter()
        .map(|rep| SchwartzFunction::coset_indicator(prime, rep, depth))
        .collect()
}

/// Compare two operators on the truncation basis: `Some(c)` if
/// `a = c b` there, `None` if they are not proportional.
pub fn proportionality_on_truncation(
    a: &WeilOperator,
    b: &WeilOperator,
    depth: i64,
) -> Option<Cyclotomic> {
    let basis = truncation_basis(a.cd.prime(), a.dims, depth);
    let mut scalar: Option<Cyclotomic> = None;
    for e in &basis {
        let ia = a.apply(e);
        let ib = b.apply(e);
        match (&ia.is_zero(), &ib.is_zero()) {
            (true, true) => continue,
            (true, false) | (false, true) => return None,
            _ => {}
        }
        let c = ia.proportionality(&ib)?;
        match &scalar {
            None => scalar = Some(c),
            Some(prev) => {
                if prev != &c {
                    return None;
                }
            }
        }
    }
    scalar.or(Some(Cyclotomic::one()))
}

/// Two operators agree on the whole truncation basis.
pub fn equal_on_truncation(a: &WeilOperator, b: &WeilOperator, depth: i64) -> bool {
    matches!(proportionality_on_truncation(a, b, depth), Some(c) if c.is_one())
}

/// The scalar `c` with `h_a(t) h_a(u) = c h_a(tu)` at the operator level -
/// the failure of the torus relation in the metaplectic cover. The matrix
/// relation holds, so the two operators must be proportional; anything else
/// is an implementation fault.
pub fn metaplectic_defect(
    t: &Rat,
    u: &Rat,
    alpha: Root,
    n: usize,
    cd: &CharacterData,
    depth: i64,
) -> Result<Cyclotomic, WeilError> {
    assert!(alpha.is_long(), "defect is probed on long roots");
    assert!(!t.is_zero() && !u.is_zero(), "torus parameters are nonzero");
    let op_t = compile_word(&chevalley::h_word(alpha, t), n, cd);
    let op_u = compile_word(&chevalley::h_word(alpha, u), n, cd);
    let op_tu = compile_word(&chevalley::h_word(alpha, &(t * u)), n, cd);
    proportionality_on_truncation(&op_t.compose(&op_u), &op_tu, depth)
        .ok_or(WeilError::NotProportional)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{rat, ratio};
    use crate::schwartz::random_function;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn cd2() -> CharacterData {
        CharacterData::standard(2)
    }

    fn phi(m: i64) -> SchwartzFunction {
        SchwartzFunction::phi_lattice(m, 2, 1)
    }

    fn random_heisenberg(rng: &mut StdRng, n: usize) -> HeisenbergElement {
        let pool = [rat(0), rat(1), rat(-1), rat(2), ratio(1, 2), ratio(-3, 2)];
        let pick = |rng: &mut StdRng| pool[rng.random_range(0..pool.len())].clone();
        HeisenbergElement::new(
            (0..n).map(|_| pick(rng)).collect(),
            (0..n).map(|_| pick(rng)).collect(),
            pick(rng),
        )
    }

    fn random_symmetric(rng: &mut StdRng, n: usize) -> RatMatrix {
        let pool = [rat(0), rat(1), rat(-1), rat(2), ratio(1, 2)];
        let mut b = RatMatrix::zero(n, n);
        for i in 0..n {
            for j in i..n {
                let v = pool[rng.random_range(0..pool.len())].clone();
                b[(i, j)] = v.clone();
                b[(j, i)] = v;
            }
        }
        b
    }

    fn random_invertible(rng: &mut StdRng, n: usize) -> RatMatrix {
        let pool = [rat(0), rat(1), rat(-1), rat(2), ratio(1, 2), rat(3)];
        loop {
            let mut b = RatMatrix::zero(n, n);
            for i in 0..n {
                for j in 0..n {
                    b[(i, j)] = pool[rng.random_range(0..pool.len())].clone();
                }
            }
            if b.inverse().is_some() {
                return b;
            }
        }
    }

    #[test]
    fn heisenberg_group_law() {
        let z1 = HeisenbergElement::central(1, rat(2));
        let z2 = HeisenbergElement::central(1, rat(3));
        assert_eq!(heisenberg_mul(&z1, &z2), HeisenbergElement::central(1, rat(5)));

        // Q(e_1, f_1) = 1
        let e1 = HeisenbergElement::new(vec![rat(1)], vec![rat(0)], rat(0));
        let f1 = HeisenbergElement::new(vec![rat(0)], vec![rat(1)], rat(0));
        let prod = heisenberg_mul(&e1, &f1);
        assert_eq!(prod.t, rat(1));
        assert_eq!((prod.x, prod.y), (vec![rat(1)], vec![rat(1)]));

        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..10 {
            let a = random_heisenberg(&mut rng, 2);
            let prod = heisenberg_mul(&a, &a.inverse());
            assert_eq!(prod, HeisenbergElement::central(2, rat(0)));
        }
    }

    #[test]
    fn rho_action_examples() {
        let cd = cd2();
        // center acts by psi(t)
        let z = HeisenbergElement::central(1, rat(1));
        assert_eq!(rho_action(&z, &phi(0), &cd), phi(0).scale(&Cyclotomic::from_int(-1)));
        // integral y-translation fixes phi_0
        let y1 = HeisenbergElement::new(vec![rat(0)], vec![rat(1)], rat(0));
        assert_eq!(rho_action(&y1, &phi(0), &cd), phi(0));
        // x-part acts by the linear character psi(-2 x . y0)
        let x1 = HeisenbergElement::new(vec![rat(1)], vec![rat(0)], rat(0));
        assert_eq!(
            rho_action(&x1, &phi(0), &cd),
            phi(0).mult_linear_character(&[rat(-2)], &cd)
        );
    }

    #[test]
    fn generator_operators() {
        let cd = cd2();
        // x(0) is the identity
        let id_op = weil_generator(&Generator::UpperUnipotent(RatMatrix::zero(1, 1)), 1, &cd);
        assert_eq!(id_op.apply(&phi(0)), phi(0));
        // w on phi_1 is (1/2) phi_{-1}
        let w = weil_generator(&Generator::Fourier, 1, &cd);
        assert_eq!(
            w.apply(&phi(1)),
            phi(-1).scale(&Cyclotomic::from_rat(ratio(1, 2)))
        );
        // h(1) is the identity
        let h = weil_generator(&Generator::Levi(RatMatrix::identity(1)), 1, &cd);
        assert_eq!(h.apply(&phi(0)), phi(0));
    }

    #[test]
    fn compile_word_examples() {
        let cd = cd2();
        // x_{2 l_1}(2) fixes phi_0 tensor phi_0
        let f2 = SchwartzFunction::phi_lattice(0, 2, 2);
        let word = vec![Letter {
            root: Root::Long { i: 1, neg: false },
            t: rat(2),
        }];
        let op = compile_word(&word, 2, &cd);
        assert_eq!(op.apply(&f2), f2);

        // empty word is the identity
        let empty = compile_word(&GroupWord::new(), 1, &cd);
        assert_eq!(empty.apply(&phi(0)), phi(0));
    }

    #[test]
    fn character_value_word() {
        // x(1) w x(-t) w^-1 x(-1) acts on phi_0 by psi(-t/4); at t = 2 the
        // value is -zeta_4
        let cd = cd2();
        let long = Root::Long { i: 1, neg: false };
        for t in [rat(2), rat(4), rat(6), rat(-2)] {
            let word = vec![
                Letter {
                    root: long,
                    t: rat(1),
                },
                Letter {
                    root: long.negate(),
                    t: t.clone(),
                },
                Letter {
                    root: long,
                    t: rat(-1),
                },
            ];
            let op = compile_word(&word, 1, &cd);
            let got = stabilizes_line(&op, &phi(0)).expect("line is stabilized");
            let expect = cd.psi().eval(&(-&t / rat(4)));
            assert_eq!(got, expect, "t = {t}");
        }
        let word = vec![
            Letter {
                root: long,
                t: rat(1),
            },
            Letter {
                root: long.negate(),
                t: rat(2),
            },
            Letter {
                root: long,
                t: rat(-1),
            },
        ];
        let got = stabilizes_line(&compile_word(&word, 1, &cd), &phi(0)).unwrap();
        assert_eq!(got, Cyclotomic::root_of_unity(&ratio(1, 4)).neg());
    }

    #[test]
    fn stabilizer_examples() {
        let cd = cd2();
        let f2 = SchwartzFunction::phi_lattice(0, 2, 2);
        let long = Root::Long { i: 1, neg: false };
        let word1 = vec![Letter {
            root: long,
            t: rat(1),
        }];
        assert!(stabilizes_line(&compile_word(&word1, 2, &cd), &f2).is_none());
        let word2 = vec![Letter {
            root: long,
            t: rat(2),
        }];
        assert_eq!(
            stabilizes_line(&compile_word(&word2, 2, &cd), &f2),
            Some(Cyclotomic::one())
        );
        let w = weil_generator(&Generator::Fourier, 1, &cd);
        assert_eq!(stabilizes_line(&w, &phi(0)), Some(Cyclotomic::one()));
    }

    #[test]
    fn intertwining_randomised() {
        let mut rng = StdRng::seed_from_u64(29);
        for n in [1usize, 2] {
            let cd = cd2();
            for _ in 0..12 {
                let h = random_heisenberg(&mut rng, n);
                let f = random_function(&mut rng, 2, n);
                let gx = Generator::UpperUnipotent(random_symmetric(&mut rng, n));
                assert!(intertwining_check(&gx, &h, &f, &cd));
                let gh = Generator::Levi(random_invertible(&mut rng, n));
                assert!(intertwining_check(&gh, &h, &f, &cd));
                assert!(intertwining_check(&Generator::Fourier, &h, &f, &cd));
            }
        }
    }

    #[test]
    fn conjugation_dictionary() {
        // compile(w^-1 x_a(t) w) = compile(x_{-a}(-t)), checked in the
        // equivalent product form x_a(t) w = w x_{-a}(-t) on a truncation
        let cd = cd2();
        for (n, depth) in [(1usize, 2i64), (2, 1)] {
            let w_word = chevalley::long_weyl_word(n);
            for root in Root::all(n) {
                for t in [rat(1), rat(2), ratio(1, 2)] {
                    let mut left = vec![Letter {
                        root,
                        t: t.clone(),
                    }];
                    left.extend(w_word.iter().cloned());
                    let mut right = w_word.clone();
                    right.push(Letter {
                        root: root.negate(),
                        t: -t.clone(),
                    });
                    let lhs = compile_word(&left, n, &cd);
                    let rhs = compile_word(&right, n, &cd);
                    assert!(
                        equal_on_truncation(&lhs, &rhs, depth),
                        "dictionary fails for {root}, t = {t}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn operator_level_r1() {
        let cd = cd2();
        for n in [1usize, 2] {
            for root in Root::all(n) {
                let (t, u) = (rat(1), rat(2));
                let word_t = vec![Letter {
                    root,
                    t: t.clone(),
                }];
                let word_u = vec![Letter {
                    root,
                    t: u.clone(),
                }];
                let word_sum = vec![Letter {
                    root,
                    t: &t + &u,
                }];
                let depth = if n == 1 { 2 } else { 1 };
                let lhs = compile_word(&word_t, n, &cd).compose(&compile_word(&word_u, n, &cd));
                let rhs = compile_word(&word_sum, n, &cd);
                assert!(equal_on_truncation(&lhs, &rhs, depth), "R1 at {root}");
            }
        }
    }

    #[test]
    fn scalar_robustness_of_line_checks() {
        let cd = cd2();
        let long = Root::Long { i: 1, neg: false };
        let zeta8 = Cyclotomic::root_of_unity(&ratio(1, 8));
        for t in [rat(1), rat(2)] {
            let word = vec![Letter {
                root: long.negate(),
                t: t.clone(),
            }];
            let op = compile_word(&word, 1, &cd);
            let rescaled = op.rescale_fourier(&zeta8);
            assert_eq!(
                stabilizes_line(&op, &phi(0)).is_some(),
                stabilizes_line(&rescaled, &phi(0)).is_some(),
                "t = {t}"
            );
        }
    }

    #[test]
    fn metaplectic_defect_basics() {
        let cd = cd2();
        let long = Root::Long { i: 1, neg: false };
        let one = metaplectic_defect(&rat(1), &rat(1), long, 1, &cd, 1).unwrap();
        assert!(one.is_one());

        // h_a(-1)^2 deviates from the identity by a root of unity
        let d = metaplectic_defect(&rat(-1), &rat(-1), long, 1, &cd, 1).unwrap();
        assert!(d.pow(8).is_one());

        // the defect is a 2-cocycle: d(t,u) d(tu,v) = d(t,uv) d(u,v)
        let grid = [rat(-1), rat(2), ratio(1, 2), rat(3)];
        let mut memo: std::collections::HashMap<(Rat, Rat), Cyclotomic> =
            std::collections::HashMap::new();
        let mut defect = |a: &Rat, b: &Rat| {
            memo.entry((a.clone(), b.clone()))
                .or_insert_with(|| metaplectic_defect(a, b, long, 1, &cd, 1).unwrap())
                .clone()
        };
        for t in &grid {
            for u in &grid {
                for v in &grid {
                    let lhs = defect(t, u).mul(&defect(&(t * u), v));
                    let rhs = defect(t, &(u * v)).mul(&defect(u, v));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn metaplectic_defect_is_nontrivial_somewhere() {
        let cd = cd2();
        let long = Root::Long { i: 1, neg: false };
        let grid = [rat(-1), rat(2), rat(-2), rat(3), ratio(1, 2)];
        let mut found = false;
        for t in &grid {
            for u in &grid {
                let d = metaplectic_defect(t, u, long, 1, &cd, 1).unwrap();
                if !d.is_one() {
                    found = true;
                }
            }
        }
        assert!(found, "torus relation lifted without defect");
    }

    #[test]
    fn operator_inverse_round_trip() {
        let cd = cd2();
        let word = chevalley::h_word(Root::Long { i: 1, neg: false }, &rat(2));
        let op = compile_word(&word, 1, &cd);
        let id = op.compose(&op.inverse());
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..5 {
            let f = random_function(&mut rng, 2, 1);
            assert_eq!(id.apply(&f), f);
        }
    }
}
