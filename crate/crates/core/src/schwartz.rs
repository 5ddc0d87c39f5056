//! Schwartz–Bruhat functions on `Q_p^n` as finite exact data.
//!
//! A function is stored by a support exponent `m` (support inside
//! `p^m Z_p^n`), a constancy exponent `N >= m` (constant on cosets of
//! `p^N Z_p^n`), and one cyclotomic value per coset of the box
//! `p^m Z_p^n / p^N Z_p^n`. Constructors trim to a canonical form: maximal
//! `m`, minimal `N`, and the zero function as the empty map with
//! `m = N = 0`.
//!
//! The transform is `f^(y) = int psi(2 u y) f(u) du`, normalised so that the
//! double transform is `f(-y)`. With a conductor-`delta` character the cell
//! volumes are rational and every value is an exact cyclotomic number; for
//! odd `c - delta` a single transform carries a formal `sqrt(p)` power in
//! [`SchwartzFunction::sqrt_scale`], which cancels in double transforms.

use crate::cyclotomic::{Cyclotomic, Rat};
use crate::dyadic::{
    coset_rep, coset_representatives, min_valuation, pow_rat, valuation, AdditiveCharacter,
    Valuation,
};
use crate::matrix::RatMatrix;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// The ambient character together with the measure normalisation data the
/// transform needs: `delta` (1 at p = 2, else 0) and the volume
/// `vol(Z_p) = p^{(c - delta)/2}`, which makes the double transform exactly
/// `f(-y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterData {
    psi: AdditiveCharacter,
}

impl CharacterData {
    pub fn new(psi: AdditiveCharacter) -> Self {
        CharacterData { psi }
    }

    /// Conductor-1 character at p = 2, self-dual conductor-0 at odd p; in
    /// both cases `c = delta` and `vol(Z_p) = 1`.
    pub fn standard(prime: u32) -> Self {
        CharacterData::new(AdditiveCharacter::standard(prime))
    }

    pub fn psi(&self) -> &AdditiveCharacter {
        &self.psi
    }

    pub fn prime(&self) -> u32 {
        self.psi.prime()
    }

    pub fn delta(&self) -> i64 {
        if self.psi.prime() == 2 {
            1
        } else {
            0
        }
    }

    pub fn conductor(&self) -> i64 {
        self.psi.conductor()
    }

    /// `c - delta`; the volume of `Z_p` is `p` to half this power, rational
    /// exactly when this is even.
    pub fn shift(&self) -> i64 {
        self.conductor() - self.delta()
    }

    pub fn vol_is_rational(&self) -> bool {
        self.shift() % 2 == 0
    }
}

/// Compactly supported, locally constant function on `Q_p^n` with exact
/// cyclotomic values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchwartzFunction {
    prime: u32,
    dims: usize,
    support_exp: i64,
    constancy_exp: i64,
    values: BTreeMap<Vec<Rat>, Cyclotomic>,
    /// Parity of a formal global `sqrt(p)` factor: the represented function
    /// is `p^{sqrt_scale/2}` times the stored values. Always 0 or 1; even
    /// powers are folded into the values.
    sqrt_scale: u8,
}

impl SchwartzFunction {
    pub fn zero(prime: u32, dims: usize) -> Self {
        SchwartzFunction {
            prime,
            dims,
            support_exp: 0,
            constancy_exp: 0,
            values: BTreeMap::new(),
            sqrt_scale: 0,
        }
    }

    /// Characteristic function of `p^m Z_p^n`.
    pub fn phi_lattice(m: i64, prime: u32, dims: usize) -> Self {
        let rep = vec![Rat::zero(); dims];
        let mut values = BTreeMap::new();
        values.insert(rep, Cyclotomic::one());
        SchwartzFunction {
            prime,
            dims,
            support_exp: m,
            constancy_exp: m,
            values,
            sqrt_scale: 0,
        }
    }

    /// Indicator of the single coset `rep + p^N Z_p^n`.
    pub fn coset_indicator(prime: u32, rep: Vec<Rat>, constancy_exp: i64) -> Self {
        let dims = rep.len();
        let m = match min_valuation(&rep, prime) {
            Valuation::Finite(v) => v.min(constancy_exp),
            Valuation::Infinite => constancy_exp,
        };
        let target = rep.clone();
        SchwartzFunction::from_fn(prime, dims, m, constancy_exp, 0, |r| {
            if r == target.as_slice() {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            }
        })
    }

    /// Build from a value assignment on the box `p^m / p^N` and trim to
    /// canonical form.
    pub fn from_fn(
        prime: u32,
        dims: usize,
        support_exp: i64,
        constancy_exp: i64,
        sqrt_scale: i64,
        mut f: impl FnMut(&[Rat]) -> Cyclotomic,
    ) -> Self {
        let reps = coset_representatives(support_exp, constancy_exp, prime, dims)
            .expect("valid lattice pair");
        let mut values = BTreeMap::new();
        for rep in reps {
            let v = f(&rep);
            values.insert(rep, v);
        }
        SchwartzFunction::from_parts(prime, dims, support_exp, constancy_exp, sqrt_scale, values)
    }

    fn from_parts(
        prime: u32,
        dims: usize,
        support_exp: i64,
        constancy_exp: i64,
        sqrt_scale: i64,
        values: BTreeMap<Vec<Rat>, Cyclotomic>,
    ) -> Self {
        let mut f = SchwartzFunction {
            prime,
            dims,
            support_exp,
            constancy_exp,
            values,
            sqrt_scale: 0,
        };
        f.trim();
        if f.values.is_empty() {
            return f;
        }
        // fold the even part of the formal sqrt power into the values
        let parity = sqrt_scale.rem_euclid(2);
        let whole = (sqrt_scale - parity) / 2;
        if whole != 0 {
            let factor = pow_rat(prime, whole);
            for v in f.values.values_mut() {
                *v = v.scale(&factor);
            }
        }
        f.sqrt_scale = parity as u8;
        f
    }

    fn retighten_support(&mut self) {
        let mut m = self.constancy_exp;
        for rep in self.values.keys() {
            if let Valuation::Finite(v) = min_valuation(rep, self.prime) {
                m = m.min(v);
            }
        }
        self.support_exp = m;
    }

    fn trim(&mut self) {
        self.values.retain(|_, v| !v.is_zero());
        if self.values.is_empty() {
            self.support_exp = 0;
            self.constancy_exp = 0;
            self.sqrt_scale = 0;
            return;
        }
        self.retighten_support();
        // coarsen the constancy exponent while every coarser coset is constant
        'coarsen: while self.constancy_exp > self.support_exp {
            let candidate = self.constancy_exp - 1;
            let sub_cells = (self.prime as u64).pow(self.dims as u32);
            let mut merged: BTreeMap<Vec<Rat>, Cyclotomic> = BTreeMap::new();
            let mut counts: BTreeMap<Vec<Rat>, u64> = BTreeMap::new();
            for (rep, v) in &self.values {
                let coarse: Vec<Rat> = rep
                    .iter()
                    .map(|x| coset_rep(x, self.support_exp, candidate, self.prime))
                    .collect();
                match merged.get(&coarse) {
                    None => {
                        merged.insert(coarse.clone(), v.clone());
                    }
                    Some(existing) => {
                        if existing != v {
                            break 'coarsen;
                        }
                    }
                }
                *counts.entry(coarse).or_insert(0) += 1;
            }
            // a coarse cell is constant only if all of its sub-cells carry the
            // common (nonzero) value; missing sub-cells are zero
            for (coarse, v) in &merged {
                if counts[coarse] != sub_cells && !v.is_zero() {
                    break 'coarsen;
                }
            }
            self.values = merged;
            self.values.retain(|_, v| !v.is_zero());
            self.constancy_exp = candidate;
            if self.values.is_empty() {
                self.support_exp = 0;
                self.constancy_exp = 0;
                self.sqrt_scale = 0;
                return;
            }
            self.retighten_support();
        }
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn support_exp(&self) -> i64 {
        self.support_exp
    }

    pub fn constancy_exp(&self) -> i64 {
        self.constancy_exp
    }

    /// Parity (0 or 1) of the formal `sqrt(p)` prefactor.
    pub fn sqrt_scale(&self) -> u8 {
        self.sqrt_scale
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of stored (nonzero) cells.
    pub fn support_cells(&self) -> usize {
        self.values.len()
    }

    /// Value at a point (the stored mantissa; multiply by `p^{sqrt_scale/2}`
    /// for the represented value - the suites only evaluate functions with
    /// `sqrt_scale = 0`).
    pub fn eval(&self, y: &[Rat]) -> Cyclotomic {
        assert_eq!(y.len(), self.dims, "dimension mismatch");
        if self.values.is_empty() {
            return Cyclotomic::zero();
        }
        for x in y {
            if !valuation(x, self.prime).at_least(self.support_exp) {
                return Cyclotomic::zero();
            }
        }
        let rep: Vec<Rat> = y
            .iter()
            .map(|x| coset_rep(x, self.support_exp, self.constancy_exp, self.prime))
            .collect();
        self.values.get(&rep).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    /// Pointwise linear combination `sum_i scalars[i] * fns[i]`.
    pub fn linear_combine(scalars: &[Cyclotomic], fns: &[&SchwartzFunction]) -> SchwartzFunction {
        assert_eq!(scalars.len(), fns.len(), "length mismatch");
        assert!(!fns.is_empty(), "empty combination");
        let prime = fns[0].prime;
        let dims = fns[0].dims;
        let mut parity: Option<u8> = None;
        for f in fns {
            assert!(
                f.prime == prime && f.dims == dims,
                "mismatched prime or dimension"
            );
            if !f.is_zero() {
                match parity {
                    None => parity = Some(f.sqrt_scale),
                    Some(p) => assert!(
                        p == f.sqrt_scale,
                        "cannot combine mixed formal sqrt scales"
                    ),
                }
            }
        }
        let m = fns
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| f.support_exp)
            .min()
            .unwrap_or(0);
        let n_exp = fns
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| f.constancy_exp)
            .max()
            .unwrap_or(0)
            .max(m);
        SchwartzFunction::from_fn(prime, dims, m, n_exp, parity.unwrap_or(0) as i64, |rep| {
            let mut acc = Cyclotomic::zero();
            for (s, f) in scalars.iter().zip(fns.iter()) {
                if !s.is_zero() {
                    let v = f.eval(rep);
                    if !v.is_zero() {
                        acc = acc.add(&s.mul(&v));
                    }
                }
            }
            acc
        })
    }

    pub fn scale(&self, c: &Cyclotomic) -> SchwartzFunction {
        if c.is_zero() {
            return SchwartzFunction::zero(self.prime, self.dims);
        }
        let values = self
            .values
            .iter()
            .map(|(k, v)| (k.clone(), v.mul(c)))
            .collect();
        SchwartzFunction::from_parts(
            self.prime,
            self.dims,
            self.support_exp,
            self.constancy_exp,
            self.sqrt_scale as i64,
            values,
        )
    }

    pub fn negate(&self) -> SchwartzFunction {
        self.scale(&Cyclotomic::from_int(-1))
    }

    pub fn add(&self, other: &SchwartzFunction) -> SchwartzFunction {
        SchwartzFunction::linear_combine(&[Cyclotomic::one(), Cyclotomic::one()], &[self, other])
    }

    pub fn sub(&self, other: &SchwartzFunction) -> SchwartzFunction {
        SchwartzFunction::linear_combine(
            &[Cyclotomic::one(), Cyclotomic::from_int(-1)],
            &[self, other],
        )
    }

    /// Pointwise product with the quadratic character `y -> psi(y^T b y)`
    /// for a symmetric matrix `b`.
    pub fn mult_quadratic_character(
        &self,
        b: &RatMatrix,
        cd: &CharacterData,
    ) -> SchwartzFunction {
        assert_eq!(cd.prime(), self.prime, "character prime mismatch");
        assert_eq!(b.rows(), self.dims, "matrix size mismatch");
        assert_eq!(
            b,
            &b.transpose(),
            "quadratic character needs a symmetric matrix"
        );
        if self.is_zero() {
            return self.clone();
        }
        let v_b = match b.min_valuation(self.prime) {
            Valuation::Finite(v) => v,
            Valuation::Infinite => return self.clone(), // b = 0
        };
        let c = cd.conductor();
        let delta = cd.delta();
        // psi(y^T b y) is constant on cosets of p^{n0}: both the cross term
        // 2 y^T b h and the square term h^T b h must die under psi
        let n0 = (c - delta - v_b - self.support_exp)
            .max((c - v_b + 1).div_euclid(2))
            .max(self.constancy_exp);
        let psi = cd.psi();
        SchwartzFunction::from_fn(
            self.prime,
            self.dims,
            self.support_exp,
            n0,
            self.sqrt_scale as i64,
            |rep| {
                let fv = self.eval(rep);
                if fv.is_zero() {
                    return fv;
                }
                let br = b.mul_vec(rep);
                let quad: Rat = rep.iter().zip(br.iter()).map(|(x, y)| x * y).sum();
                psi.eval(&quad).mul(&fv)
            },
        )
    }

    /// Pointwise product with the linear character `y -> psi(a^T y)`.
    pub fn mult_linear_character(&self, a: &[Rat], cd: &CharacterData) -> SchwartzFunction {
        assert_eq!(cd.prime(), self.prime, "character prime mismatch");
        assert_eq!(a.len(), self.dims, "dimension mismatch");
        if self.is_zero() {
            return self.clone();
        }
        let v_a = match min_valuation(a, self.prime) {
            Valuation::Finite(v) => v,
            Valuation::Infinite => return self.clone(), // a = 0
        };
        let n0 = (cd.conductor() - v_a).max(self.constancy_exp);
        let psi = cd.psi();
        SchwartzFunction::from_fn(
            self.prime,
            self.dims,
            self.support_exp,
            n0,
            self.sqrt_scale as i64,
            |rep| {
                let fv = self.eval(rep);
                if fv.is_zero() {
                    return fv;
                }
                let lin: Rat = a.iter().zip(rep.iter()).map(|(x, y)| x * y).sum();
                psi.eval(&lin).mul(&fv)
            },
        )
    }

    /// Linear substitution `y -> f(b^T y)` for invertible `b`.
    pub fn substitute_linear(&self, b: &RatMatrix) -> SchwartzFunction {
        assert_eq!(b.rows(), self.dims, "matrix size mismatch");
        let bt = b.transpose();
        let bt_inv = bt
            .inverse()
            .expect("substitution needs an invertible matrix");
        if self.is_zero() {
            return self.clone();
        }
        let v_fwd = bt
            .min_valuation(self.prime)
            .finite()
            .expect("nonzero matrix");
        let v_inv = bt_inv
            .min_valuation(self.prime)
            .finite()
            .expect("nonzero matrix");
        let m = self.support_exp + v_inv;
        let n_exp = self.constancy_exp - v_fwd;
        SchwartzFunction::from_fn(
            self.prime,
            self.dims,
            m.min(n_exp),
            n_exp,
            self.sqrt_scale as i64,
            |rep| self.eval(&bt.mul_vec(rep)),
        )
    }

    /// Translation `y -> f(y + a)`.
    pub fn translate(&self, a: &[Rat]) -> SchwartzFunction {
        assert_eq!(a.len(), self.dims, "dimension mismatch");
        if self.is_zero() {
            return self.clone();
        }
        let m = match min_valuation(a, self.prime) {
            Valuation::Finite(v) => self.support_exp.min(v),
            Valuation::Infinite => self.support_exp,
        };
        SchwartzFunction::from_fn(
            self.prime,
            self.dims,
            m,
            self.constancy_exp,
            self.sqrt_scale as i64,
            |rep| {
                let shifted: Vec<Rat> = rep.iter().zip(a.iter()).map(|(x, y)| x + y).collect();
                self.eval(&shifted)
            },
        )
    }

    /// `f(-y)`.
    pub fn reflect(&self) -> SchwartzFunction {
        let minus = RatMatrix::identity(self.dims).scale(&-Rat::from_integer(1.into()));
        self.substitute_linear(&minus)
    }

    /// Exact partial Fourier transform in coordinate `i`.
    pub fn fourier_partial(&self, i: usize, cd: &CharacterData) -> SchwartzFunction {
        assert_eq!(cd.prime(), self.prime, "character prime mismatch");
        assert!(i < self.dims, "coordinate out of range");
        if self.is_zero() {
            return self.clone();
        }
        let shift = cd.shift();
        let (m, n_exp) = (self.support_exp, self.constancy_exp);
        // exact support and constancy bounds of the transform in coordinate i
        let supp_i = -n_exp + shift;
        let const_i = -m + shift;
        // the uniform storage box must still cover the untransformed
        // coordinates, so it is the join of the old box with (supp_i, const_i)
        let out_m = m.min(supp_i);
        let out_n = n_exp.max(const_i).max(out_m);
        let cells_1d = coset_representatives(m, n_exp, self.prime, 1).expect("valid box");
        let cell_vol = pow_rat(self.prime, -n_exp);
        let psi = cd.psi();
        let two = Rat::from_integer(2.into());
        let result = SchwartzFunction::from_fn(
            self.prime,
            self.dims,
            out_m,
            out_n,
            self.sqrt_scale as i64 + shift,
            |rep| {
                // below the support bound the character is non-constant on the
                // integration cells and the integral vanishes by cancellation
                if !valuation(&rep[i], self.prime).at_least(supp_i) {
                    return Cyclotomic::zero();
                }
                let mut acc = Cyclotomic::zero();
                let mut point = rep.to_vec();
                for cell in &cells_1d {
                    let a = &cell[0];
                    point[i] = a.clone();
                    let fv = self.eval(&point);
                    if fv.is_zero() {
                        continue;
                    }
                    let phase = psi.eval(&(&two * a * &rep[i]));
                    acc = acc.add(&phase.mul(&fv));
                }
                acc.scale(&cell_vol)
            },
        );
        // support/constancy law of the transform, checked structurally
        if !result.is_zero() && self.dims == 1 {
            debug_assert!(result.support_exp >= supp_i);
            debug_assert!(result.constancy_exp <= const_i);
        }
        result
    }

    /// Full transform: the partial transform applied in every coordinate.
    pub fn fourier_full(&self, cd: &CharacterData) -> SchwartzFunction {
        let mut f = self.clone();
        for i in 0..self.dims {
            f = f.fourier_partial(i, cd);
        }
        f
    }

    /// Tensor product; `self` supplies the leading coordinates.
    pub fn tensor(&self, other: &SchwartzFunction) -> SchwartzFunction {
        assert_eq!(self.prime, other.prime, "prime mismatch");
        if self.is_zero() || other.is_zero() {
            return SchwartzFunction::zero(self.prime, self.dims + other.dims);
        }
        let m = self.support_exp.min(other.support_exp);
        let n_exp = self.constancy_exp.max(other.constancy_exp);
        let dims = self.dims + other.dims;
        let split = self.dims;
        SchwartzFunction::from_fn(
            self.prime,
            dims,
            m,
            n_exp,
            (self.sqrt_scale + other.sqrt_scale) as i64,
            |rep| {
                let left = self.eval(&rep[..split]);
                if left.is_zero() {
                    return left;
                }
                left.mul(&other.eval(&rep[split..]))
            },
        )
    }

    /// `sum_cells vol(cell) |f|^2` - the exact squared norm, for contexts
    /// with rational cell volumes (`c = delta`).
    pub fn mass(&self, cd: &CharacterData) -> Cyclotomic {
        assert!(cd.vol_is_rational(), "mass needs a rational volume");
        assert_eq!(self.sqrt_scale, 0, "mass of a half-scaled function");
        let vol = pow_rat(self.prime, -self.constancy_exp * self.dims as i64)
            * pow_rat(self.prime, cd.shift() / 2 * self.dims as i64);
        let mut acc = Cyclotomic::zero();
        for v in self.values.values() {
            acc = acc.add(&v.norm_sq());
        }
        acc.scale(&vol)
    }

    /// Iterate the stored nonzero cells.
    pub fn cells(&self) -> impl Iterator<Item = (&Vec<Rat>, &Cyclotomic)> {
        self.values.iter()
    }

    /// If `self = c * other` for a scalar `c`, return it. `other` must be
    /// nonzero.
    pub fn proportionality(&self, other: &SchwartzFunction) -> Option<Cyclotomic> {
        assert!(!other.is_zero(), "proportionality against zero");
        if self.is_zero() {
            return None;
        }
        if self.sqrt_scale != other.sqrt_scale {
            return None;
        }
        let (rep, val) = other.values.iter().next().expect("nonzero");
        let here = self.eval(rep);
        if here.is_zero() {
            return None;
        }
        let c = here.div(val).expect("nonzero value");
        if self == &other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }
}

impl Serialize for SchwartzFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Cell {
            rep: Vec<String>,
            val: Cyclotomic,
        }
        let reps =
            coset_representatives(self.support_exp, self.constancy_exp, self.prime, self.dims)
                .expect("canonical box");
        let values: Vec<Cell> = if self.is_zero() {
            Vec::new()
        } else {
            reps.into_iter()
                .map(|rep| {
                    let val = self
                        .values
                        .get(&rep)
                        .cloned()
                        .unwrap_or_else(Cyclotomic::zero);
                    Cell {
                        rep: rep.iter().map(|x| x.to_string()).collect(),
                        val,
                    }
                })
                .collect()
        };
        let mut s = serializer.serialize_struct("SchwartzFunction", 6)?;
        s.serialize_field("p", &self.prime)?;
        s.serialize_field("n", &self.dims)?;
        s.serialize_field("m", &self.support_exp)?;
        s.serialize_field("N", &self.constancy_exp)?;
        if self.sqrt_scale != 0 {
            s.serialize_field("sqrt_scale", &self.sqrt_scale)?;
        } else {
            s.skip_field("sqrt_scale")?;
        }
        s.serialize_field("values", &values)?;
        s.end()
    }
}

/// Random locally constant function with small support, for the randomised
/// suites and tests.
pub fn random_function(
    rng: &mut impl rand::Rng,
    prime: u32,
    dims: usize,
) -> SchwartzFunction {
    use crate::cyclotomic::ratio;
    let m = rng.random_range(-1..=0);
    let n_exp = rng.random_range(m..=m + 1);
    let pool: Vec<Cyclotomic> = vec![
        Cyclotomic::zero(),
        Cyclotomic::one(),
        Cyclotomic::from_int(-1),
        Cyclotomic::from_rat(ratio(1, 2)),
        Cyclotomic::from_int(2),
        Cyclotomic::root_of_unity(&ratio(1, 4)),
        Cyclotomic::root_of_unity(&ratio(1, 8)),
    ];
    SchwartzFunction::from_fn(prime, dims, m, n_exp, 0, |_| {
        pool[rng.random_range(0..pool.len())].clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{rat, ratio};
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn phi(m: i64) -> SchwartzFunction {
        SchwartzFunction::phi_lattice(m, 2, 1)
    }

    fn cd2() -> CharacterData {
        CharacterData::standard(2)
    }

    #[test]
    fn lattice_indicators() {
        let f = phi(0);
        assert!(f.eval(&[rat(3)]).is_one());
        assert!(f.eval(&[ratio(1, 2)]).is_zero());
        let g = phi(1);
        assert!(g.eval(&[rat(1)]).is_zero());
        assert!(g.eval(&[rat(2)]).is_one());
        let h = SchwartzFunction::phi_lattice(0, 2, 2);
        assert!(h.eval(&[rat(0), rat(0)]).is_one());
        assert!(h.eval(&[ratio(1, 2), rat(0)]).is_zero());
    }

    #[test]
    fn linear_combinations_and_partitions() {
        let zero = phi(0).sub(&phi(0));
        assert!(zero.is_zero());
        assert_eq!(zero.support_cells(), 0);

        // -phi_0 + 2 phi_1 is 1 on 2Z_2 and -1 on the units
        let f = SchwartzFunction::linear_combine(
            &[Cyclotomic::from_int(-1), Cyclotomic::from_int(2)],
            &[&phi(0), &phi(1)],
        );
        assert_eq!(f.eval(&[rat(2)]), Cyclotomic::one());
        assert_eq!(f.eval(&[rat(1)]), Cyclotomic::from_int(-1));
        assert_eq!(f.eval(&[ratio(1, 2)]), Cyclotomic::zero());

        // indicator of 1 + 2Z_2 plus phi_1 is phi_0
        let odd = phi(1).translate(&[rat(1)]);
        assert_eq!(odd.add(&phi(1)), phi(0));
    }

    #[test]
    fn quadratic_character_examples() {
        let b = RatMatrix::from_rows(vec![vec![rat(-1)]]);
        let f = phi(0).mult_quadratic_character(&b, &cd2());
        let expect = SchwartzFunction::linear_combine(
            &[Cyclotomic::from_int(-1), Cyclotomic::from_int(2)],
            &[&phi(0), &phi(1)],
        );
        assert_eq!(f, expect);

        let b2 = RatMatrix::from_rows(vec![vec![rat(2)]]);
        assert_eq!(phi(0).mult_quadratic_character(&b2, &cd2()), phi(0));

        let zero = RatMatrix::zero(1, 1);
        assert_eq!(phi(0).mult_quadratic_character(&zero, &cd2()), phi(0));
    }

    #[test]
    fn linear_character_examples() {
        assert_eq!(phi(0).mult_linear_character(&[rat(0)], &cd2()), phi(0));
        assert_eq!(phi(0).mult_linear_character(&[rat(2)], &cd2()), phi(0));
        // psi(y) on Z_2 is +1 on 2Z_2 and -1 on units
        let f = phi(0).mult_linear_character(&[rat(1)], &cd2());
        let odd = phi(1).translate(&[rat(1)]);
        let expect = phi(1).sub(&odd);
        assert_eq!(f, expect);
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(phi(0).substitute_linear(&RatMatrix::identity(1)), phi(0));
        let two = RatMatrix::from_rows(vec![vec![rat(2)]]);
        assert_eq!(phi(0).substitute_linear(&two), phi(-1));

        let swap = RatMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        let f = SchwartzFunction::phi_lattice(1, 2, 1).tensor(&phi(0));
        let g = phi(0).tensor(&SchwartzFunction::phi_lattice(1, 2, 1));
        assert_eq!(f.substitute_linear(&swap), g);
    }

    #[test]
    fn translation_examples() {
        assert_eq!(phi(1).translate(&[rat(0)]), phi(1));
        let shifted = phi(1).translate(&[rat(1)]);
        assert!(shifted.eval(&[rat(1)]).is_one());
        assert!(shifted.eval(&[rat(0)]).is_zero());
        let half = phi(0).translate(&[ratio(1, 2)]);
        assert!(half.eval(&[ratio(1, 2)]).is_one());
        assert!(half.eval(&[rat(0)]).is_zero());
        assert_eq!(half.support_exp(), -1);
    }

    #[test]
    fn fourier_of_lattice_indicators() {
        // standard dyadic character: phi_m transforms to 2^-m phi_{-m}
        for m in -2..=2i64 {
            let lhs = phi(m).fourier_full(&cd2());
            let rhs = phi(-m).scale(&Cyclotomic::from_rat(pow_rat(2, -m)));
            assert_eq!(lhs, rhs, "transform of phi_{m}");
        }
        // p = 3 with the self-dual character: phi_0 is its own transform
        let cd3 = CharacterData::standard(3);
        let f3 = SchwartzFunction::phi_lattice(0, 3, 1);
        assert_eq!(f3.fourier_full(&cd3), f3);
    }

    #[test]
    fn fourier_of_mixed_function() {
        // -phi_0 + 2 phi_1 transforms to -phi_0 + phi_{-1}
        let f = SchwartzFunction::linear_combine(
            &[Cyclotomic::from_int(-1), Cyclotomic::from_int(2)],
            &[&phi(0), &phi(1)],
        );
        let expect = SchwartzFunction::linear_combine(
            &[Cyclotomic::from_int(-1), Cyclotomic::one()],
            &[&phi(0), &phi(-1)],
        );
        assert_eq!(f.fourier_full(&cd2()), expect);
    }

    #[test]
    fn equality_distinguishes() {
        assert_eq!(phi(0), phi(0));
        assert_ne!(phi(0), phi(1));
    }

    #[test]
    fn fourier_inversion_randomised() {
        let mut rng = StdRng::seed_from_u64(7);
        for p in [2u32, 3] {
            let delta = if p == 2 { 1 } else { 0 };
            for extra in [0i64, 1] {
                // conductor delta and delta + 1
                let shift = pow_rat(p, -(delta + extra));
                let cd = CharacterData::new(AdditiveCharacter::new(p, shift));
                assert_eq!(cd.conductor(), delta + extra);
                for _ in 0..12 {
                    let f = random_function(&mut rng, p, 1);
                    let double = f.fourier_full(&cd).fourier_full(&cd);
                    assert_eq!(
                        double,
                        f.reflect(),
                        "inversion at p={p}, c={}",
                        delta + extra
                    );
                }
            }
        }
    }

    #[test]
    fn tensor_compatibility() {
        let mut rng = StdRng::seed_from_u64(11);
        let cd = cd2();
        for _ in 0..8 {
            let f = random_function(&mut rng, 2, 1);
            let g = random_function(&mut rng, 2, 1);
            assert_eq!(
                f.tensor(&g).fourier_full(&cd),
                f.fourier_full(&cd).tensor(&g.fourier_full(&cd))
            );
        }
    }

    #[test]
    fn plancherel_mass_is_preserved() {
        let mut rng = StdRng::seed_from_u64(13);
        for p in [2u32, 3] {
            let cd = CharacterData::standard(p);
            for _ in 0..10 {
                let f = random_function(&mut rng, p, 1);
                assert_eq!(f.mass(&cd), f.fourier_full(&cd).mass(&cd));
            }
        }
    }

    #[test]
    fn trim_preserves_evaluations() {
        // build a redundant representation and check probes agree
        let f = SchwartzFunction::from_fn(2, 1, -1, 2, 0, |rep| {
            if valuation(&rep[0], 2).at_least(0) {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            }
        });
        assert_eq!(f, phi(0));
        assert_eq!((f.support_exp(), f.constancy_exp()), (0, 0));
        for probe in [rat(0), rat(1), rat(3), ratio(1, 2), ratio(5, 2), rat(4)] {
            assert_eq!(f.eval(std::slice::from_ref(&probe)), phi(0).eval(&[probe]));
        }
    }

    #[test]
    fn proportionality_detects_scalars() {
        let f = phi(0);
        let g = f.scale(&Cyclotomic::root_of_unity(&ratio(1, 8)));
        assert_eq!(
            g.proportionality(&f),
            Some(Cyclotomic::root_of_unity(&ratio(1, 8)))
        );
        assert!(phi(1).proportionality(&f).is_none());
    }

    #[test]
    fn serialization_shape() {
        let f = phi(1);
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json["p"], 2);
        assert_eq!(json["n"], 1);
        assert_eq!(json["m"], 1);
        assert_eq!(json["N"], 1);
        assert_eq!(json["values"][0]["rep"][0], "0");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn double_transform_is_reflection(seed in 0u64..1000) {
            let mut rng = StdRng::seed_from_u64(seed);
            let cd = cd2();
            let f = random_function(&mut rng, 2, 1);
            prop_assert_eq!(f.fourier_full(&cd).fourier_full(&cd), f.reflect());
        }
    }
}
