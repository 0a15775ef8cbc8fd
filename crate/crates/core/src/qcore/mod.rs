//! Dense complex linear algebra over labeled qubit registers (dimension ≤ 32).
//!
//! States and operators carry an ordered list of [`Qubit`] labels; basis
//! indices are big-endian over that list, so `labels[0]` owns the most
//! significant bit. The canonical global ordering is `(C, A, B, Da, Db)`,
//! which is the derived `Ord` on [`Qubit`].

mod linalg;

pub use linalg::{herm_eig, psd_sqrt};
pub(crate) use linalg::herm_eig_raw;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Qubit labels of the five-qubit register: control, two system qubits, and
/// their detectors. The declaration order is the global tensor order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Qubit {
    /// Control qubit selecting the measurement branch.
    C,
    /// First system qubit.
    A,
    /// Second system qubit.
    B,
    /// Detector coupled to `A`.
    Da,
    /// Detector coupled to `B`.
    Db,
}

fn check_labels(labels: &[Qubit]) -> Result<()> {
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(*l));
        }
    }
    Ok(())
}

/// Bit of `idx` owned by label position `pos` (big-endian over `n` labels).
#[inline]
fn bit_at(idx: usize, pos: usize, n: usize) -> usize {
    (idx >> (n - 1 - pos)) & 1
}

/// Insert bit `b` at label position `pos` into an index over `n - 1` labels,
/// producing an index over `n` labels.
#[inline]
fn insert_bit(rest: usize, pos: usize, n: usize, b: usize) -> usize {
    let shift = n - 1 - pos;
    let high = rest >> shift;
    let low = rest & ((1 << shift) - 1);
    (high << (shift + 1)) | (b << shift) | low
}

/// Scatter the bits of `val` (big-endian over `positions`) into an index
/// over `n` labels.
#[inline]
fn scatter(val: usize, positions: &[usize], n: usize) -> usize {
    let mut idx = 0;
    for (j, &pos) in positions.iter().enumerate() {
        let b = (val >> (positions.len() - 1 - j)) & 1;
        idx |= b << (n - 1 - pos);
    }
    idx
}

/// A state vector over an ordered list of qubit labels.
///
/// The norm may be below one: unnormalized conditional states are
/// first-class values.
#[derive(Debug, Clone, PartialEq)]
pub struct Ket {
    labels: Vec<Qubit>,
    amp: Vec<Complex64>,
}

impl Ket {
    pub fn new(labels: Vec<Qubit>, amp: Vec<Complex64>) -> Result<Self> {
        check_labels(&labels)?;
        let dim = 1usize << labels.len();
        if amp.len() != dim {
            return Err(Error::BadDimension {
                got: amp.len(),
                expected: dim,
            });
        }
        if amp.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFiniteAmplitude);
        }
        Ok(Self { labels, amp })
    }

    /// Computational basis state `|b⟩` on a single label.
    pub fn basis(label: Qubit, b: u8) -> Self {
        let mut amp = vec![Complex64::ZERO; 2];
        amp[(b & 1) as usize] = Complex64::ONE;
        Self {
            labels: vec![label],
            amp,
        }
    }

    /// `|+⟩ = (|0⟩ + |1⟩)/√2`.
    pub fn plus(label: Qubit) -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            labels: vec![label],
            amp: vec![h, h],
        }
    }

    /// `|−⟩ = (|0⟩ − |1⟩)/√2`.
    pub fn minus(label: Qubit) -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            labels: vec![label],
            amp: vec![h, -h],
        }
    }

    /// `|Φ⁺⟩ = (|00⟩ + |11⟩)/√2`.
    pub fn bell_phi_plus(la: Qubit, lb: Qubit) -> Self {
        Self::bell(la, lb, Complex64::ONE, 0)
    }

    /// `|Φ⁻⟩ = (|00⟩ − |11⟩)/√2`.
    pub fn bell_phi_minus(la: Qubit, lb: Qubit) -> Self {
        Self::bell(la, lb, -Complex64::ONE, 0)
    }

    /// `|Ψ⁺⟩ = (|01⟩ + |10⟩)/√2`.
    pub fn bell_psi_plus(la: Qubit, lb: Qubit) -> Self {
        Self::bell(la, lb, Complex64::ONE, 1)
    }

    /// `|Ψ⁻⟩ = (|01⟩ − |10⟩)/√2`.
    pub fn bell_psi_minus(la: Qubit, lb: Qubit) -> Self {
        Self::bell(la, lb, -Complex64::ONE, 1)
    }

    fn bell(la: Qubit, lb: Qubit, sign: Complex64, kind: usize) -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mut amp = vec![Complex64::ZERO; 4];
        // kind 0: |00⟩ ± |11⟩, kind 1: |01⟩ ± |10⟩
        amp[kind] = h;
        amp[3 - kind] = sign * h;
        Self {
            labels: vec![la, lb],
            amp,
        }
    }

    pub fn labels(&self) -> &[Qubit] {
        &self.labels
    }

    pub fn amp(&self) -> &[Complex64] {
        &self.amp
    }

    pub fn dim(&self) -> usize {
        self.amp.len()
    }

    pub fn norm_sq(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            labels: self.labels.clone(),
            amp: self.amp.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n <= tol::DEGENERATE_WEIGHT {
            return Err(Error::NotNormalized(n));
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }

    /// Kronecker product; labels concatenate and must stay disjoint.
    pub fn tensor(&self, other: &Ket) -> Result<Ket> {
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        check_labels(&labels)?;
        let mut amp = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amp {
            for b in &other.amp {
                amp.push(a * b);
            }
        }
        Ok(Ket { labels, amp })
    }

    /// `⟨self|other⟩`; `other` may carry the same labels in another order.
    pub fn inner(&self, other: &Ket) -> Result<Complex64> {
        let other = other.permuted(&self.labels)?;
        Ok(self
            .amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Squared overlap of the normalized states, `|⟨a|b⟩|² / (‖a‖²‖b‖²)`.
    pub fn fidelity(&self, other: &Ket) -> Result<f64> {
        let na = self.norm_sq();
        let nb = other.norm_sq();
        if na <= tol::DEGENERATE_WEIGHT || nb <= tol::DEGENERATE_WEIGHT {
            return Err(Error::NotNormalized(na.min(nb).sqrt()));
        }
        Ok(self.inner(other)?.norm_sqr() / (na * nb))
    }

    /// Reorder the tensor factors to `new_labels` (a permutation of the
    /// current labels).
    pub fn permuted(&self, new_labels: &[Qubit]) -> Result<Ket> {
        if new_labels == self.labels.as_slice() {
            return Ok(self.clone());
        }
        let map = permutation_map(&self.labels, new_labels)?;
        let mut amp = vec![Complex64::ZERO; self.dim()];
        for (new_idx, slot) in amp.iter_mut().enumerate() {
            *slot = self.amp[map[new_idx]];
        }
        Ok(Ket {
            labels: new_labels.to_vec(),
            amp,
        })
    }

    /// Contract one qubit with `⟨bra|`, returning the (unnormalized) state on
    /// the remaining labels.
    pub fn project(&self, label: Qubit, bra: &Ket) -> Result<Ket> {
        if bra.labels.len() != 1 || bra.labels[0] != label {
            return Err(Error::MissingLabel(label));
        }
        let pos = self
            .labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::MissingLabel(label))?;
        let n = self.labels.len();
        let mut labels = self.labels.clone();
        labels.remove(pos);
        let mut amp = vec![Complex64::ZERO; self.dim() / 2];
        for (rest, slot) in amp.iter_mut().enumerate() {
            for b in 0..2 {
                *slot += bra.amp[b].conj() * self.amp[insert_bit(rest, pos, n, b)];
            }
        }
        Ok(Ket { labels, amp })
    }

    /// Outer product `|ψ⟩⟨ψ|`, flagged as an (unnormalized) density with
    /// weight `‖ψ‖²`.
    pub fn outer(&self) -> Op {
        let d = self.dim();
        let mut m = vec![Complex64::ZERO; d * d];
        for r in 0..d {
            for c in 0..d {
                m[r * d + c] = self.amp[r] * self.amp[c].conj();
            }
        }
        Op {
            labels: self.labels.clone(),
            m,
            density: Some(self.norm_sq()),
        }
    }

    /// Largest absolute amplitude difference; labels must match in order.
    pub fn max_abs_diff(&self, other: &Ket) -> f64 {
        assert_eq!(self.labels, other.labels, "label mismatch");
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Add for &Ket {
    type Output = Ket;

    fn add(self, rhs: &Ket) -> Ket {
        assert_eq!(self.labels, rhs.labels, "label mismatch");
        Ket {
            labels: self.labels.clone(),
            amp: self
                .amp
                .iter()
                .zip(&rhs.amp)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &Ket {
    type Output = Ket;

    fn sub(self, rhs: &Ket) -> Ket {
        assert_eq!(self.labels, rhs.labels, "label mismatch");
        Ket {
            labels: self.labels.clone(),
            amp: self
                .amp
                .iter()
                .zip(&rhs.amp)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// `map[new_idx] = old_idx` for a relabeling of tensor factors.
fn permutation_map(old: &[Qubit], new: &[Qubit]) -> Result<Vec<usize>> {
    if new.len() != old.len() {
        return Err(Error::LabelMismatch(old.to_vec(), new.to_vec()));
    }
    let n = old.len();
    let mut old_pos = Vec::with_capacity(n);
    for l in new {
        old_pos.push(
            old.iter()
                .position(|x| x == l)
                .ok_or(Error::MissingLabel(*l))?,
        );
    }
    check_labels(new)?;
    let dim = 1usize << n;
    let mut map = vec![0usize; dim];
    for (new_idx, slot) in map.iter_mut().enumerate() {
        let mut old_idx = 0;
        for (p_new, &p_old) in old_pos.iter().enumerate() {
            old_idx |= bit_at(new_idx, p_new, n) << (n - 1 - p_old);
        }
        *slot = old_idx;
    }
    Ok(map)
}

/// A square operator over an ordered list of qubit labels, stored row-major.
///
/// A value flagged as a density (see [`Op::into_density`]) is certified
/// Hermitian and positive semidefinite with trace equal to its stored weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Op {
    labels: Vec<Qubit>,
    m: Vec<Complex64>,
    density: Option<f64>,
}

impl Op {
    pub fn new(labels: Vec<Qubit>, m: Vec<Complex64>) -> Result<Self> {
        check_labels(&labels)?;
        let side = 1usize << labels.len();
        if m.len() != side * side {
            return Err(Error::BadDimension {
                got: m.len(),
                expected: side * side,
            });
        }
        if m.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFiniteAmplitude);
        }
        Ok(Self {
            labels,
            m,
            density: None,
        })
    }

    pub fn identity(labels: Vec<Qubit>) -> Result<Self> {
        check_labels(&labels)?;
        let side = 1usize << labels.len();
        let mut m = vec![Complex64::ZERO; side * side];
        for r in 0..side {
            m[r * side + r] = Complex64::ONE;
        }
        Ok(Self {
            labels,
            m,
            density: None,
        })
    }

    pub fn pauli_x(label: Qubit) -> Self {
        Self::single(label, [0.0.into(), 1.0.into(), 1.0.into(), 0.0.into()])
    }

    pub fn pauli_y(label: Qubit) -> Self {
        let i = Complex64::I;
        Self::single(label, [0.0.into(), -i, i, 0.0.into()])
    }

    pub fn pauli_z(label: Qubit) -> Self {
        Self::single(label, [1.0.into(), 0.0.into(), 0.0.into(), (-1.0).into()])
    }

    fn single(label: Qubit, m: [Complex64; 4]) -> Self {
        Self {
            labels: vec![label],
            m: m.to_vec(),
            density: None,
        }
    }

    pub fn labels(&self) -> &[Qubit] {
        &self.labels
    }

    /// Side length of the matrix, `2^(#labels)`.
    pub fn side(&self) -> usize {
        1usize << self.labels.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.m[r * self.side() + c]
    }

    pub fn is_density(&self) -> bool {
        self.density.is_some()
    }

    pub fn density_weight(&self) -> Option<f64> {
        self.density
    }

    /// Certify this operator as a density with the given trace weight.
    ///
    /// Checks Hermiticity, positive semidefiniteness, and the trace, failing
    /// with the first violated property.
    pub fn into_density(mut self, weight: f64) -> Result<Self> {
        let herm = self.herm_deviation();
        if herm > tol::DENSITY_HERM_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let (evals, _) = herm_eig_raw(self.side(), &self.m)?;
        let min = evals.last().copied().unwrap_or(0.0);
        if min < tol::DENSITY_PSD_FLOOR {
            return Err(Error::NotPsd(min));
        }
        let tr = self.trace();
        if (tr.re - weight).abs() > tol::DENSITY_TRACE_TOL || tr.im.abs() > tol::DENSITY_TRACE_TOL
        {
            return Err(Error::NotDensity(format!(
                "trace {tr} differs from stored weight {weight}"
            )));
        }
        self.density = Some(weight);
        Ok(self)
    }

    pub fn trace(&self) -> Complex64 {
        let side = self.side();
        (0..side).map(|r| self.m[r * side + r]).sum()
    }

    pub fn adjoint(&self) -> Self {
        let side = self.side();
        let mut m = vec![Complex64::ZERO; side * side];
        for r in 0..side {
            for c in 0..side {
                m[r * side + c] = self.m[c * side + r].conj();
            }
        }
        Self {
            labels: self.labels.clone(),
            m,
            density: None,
        }
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conjugated(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            m: self.m.iter().map(|a| a.conj()).collect(),
            density: None,
        }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            labels: self.labels.clone(),
            m: self.m.iter().map(|a| a * factor).collect(),
            density: None,
        }
    }

    /// Matrix product; `rhs` may carry the same labels in another order.
    pub fn mul(&self, rhs: &Op) -> Result<Op> {
        let rhs = rhs.permuted(&self.labels)?;
        let side = self.side();
        let mut m = vec![Complex64::ZERO; side * side];
        for r in 0..side {
            for k in 0..side {
                let a = self.m[r * side + k];
                if a == Complex64::ZERO {
                    continue;
                }
                for c in 0..side {
                    m[r * side + c] += a * rhs.m[k * side + c];
                }
            }
        }
        Ok(Op {
            labels: self.labels.clone(),
            m,
            density: None,
        })
    }

    /// Apply to a state; the ket may carry the same labels in another order.
    pub fn apply(&self, ket: &Ket) -> Result<Ket> {
        let ket = ket.permuted(&self.labels)?;
        let side = self.side();
        let mut amp = vec![Complex64::ZERO; side];
        for (r, slot) in amp.iter_mut().enumerate() {
            for c in 0..side {
                *slot += self.m[r * side + c] * ket.amp[c];
            }
        }
        Ok(Ket {
            labels: self.labels.clone(),
            amp,
        })
    }

    /// `⟨ψ|M|ψ⟩`.
    pub fn expectation(&self, ket: &Ket) -> Result<Complex64> {
        let ket = ket.permuted(&self.labels)?;
        ket.inner(&self.apply(&ket)?)
    }

    /// Kronecker product; labels concatenate and must stay disjoint. The
    /// result keeps the density flag (with multiplied weights) when both
    /// factors carry one.
    pub fn tensor(&self, other: &Op) -> Result<Op> {
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        check_labels(&labels)?;
        let (sa, sb) = (self.side(), other.side());
        let side = sa * sb;
        let mut m = vec![Complex64::ZERO; side * side];
        for ra in 0..sa {
            for ca in 0..sa {
                let a = self.m[ra * sa + ca];
                if a == Complex64::ZERO {
                    continue;
                }
                for rb in 0..sb {
                    for cb in 0..sb {
                        m[(ra * sb + rb) * side + (ca * sb + cb)] = a * other.m[rb * sb + cb];
                    }
                }
            }
        }
        let density = match (self.density, other.density) {
            (Some(wa), Some(wb)) => Some(wa * wb),
            _ => None,
        };
        Ok(Op { labels, m, density })
    }

    /// Trace out every label not in `keep`. Requires a density-flagged input;
    /// the result keeps the flag and the weight.
    pub fn partial_trace(&self, keep: &[Qubit]) -> Result<Op> {
        let weight = self.density.ok_or_else(|| {
            Error::NotDensity("partial_trace input must be flagged as a density".into())
        })?;
        let n = self.labels.len();
        let mut kept_pos = Vec::new();
        let mut kept_labels = Vec::new();
        for l in keep {
            if !self.labels.contains(l) {
                return Err(Error::MissingLabel(*l));
            }
        }
        for (pos, l) in self.labels.iter().enumerate() {
            if keep.contains(l) {
                kept_pos.push(pos);
                kept_labels.push(*l);
            }
        }
        let traced_pos: Vec<usize> = (0..n).filter(|p| !kept_pos.contains(p)).collect();
        let side = self.side();
        let kd = 1usize << kept_pos.len();
        let td = 1usize << traced_pos.len();
        let mut m = vec![Complex64::ZERO; kd * kd];
        for kr in 0..kd {
            for kc in 0..kd {
                let mut acc = Complex64::ZERO;
                for t in 0..td {
                    let r = scatter(kr, &kept_pos, n) | scatter(t, &traced_pos, n);
                    let c = scatter(kc, &kept_pos, n) | scatter(t, &traced_pos, n);
                    acc += self.m[r * side + c];
                }
                m[kr * kd + kc] = acc;
            }
        }
        Ok(Op {
            labels: kept_labels,
            m,
            density: Some(weight),
        })
    }

    /// Reorder the tensor factors to `new_labels` (a permutation of the
    /// current labels). Density flags survive relabeling.
    pub fn permuted(&self, new_labels: &[Qubit]) -> Result<Op> {
        if new_labels == self.labels.as_slice() {
            return Ok(self.clone());
        }
        let map = permutation_map(&self.labels, new_labels)?;
        let side = self.side();
        let mut m = vec![Complex64::ZERO; side * side];
        for r in 0..side {
            for c in 0..side {
                m[r * side + c] = self.m[map[r] * side + map[c]];
            }
        }
        Ok(Op {
            labels: new_labels.to_vec(),
            m,
            density: self.density,
        })
    }

    /// `‖M − M†‖_max`.
    pub fn herm_deviation(&self) -> f64 {
        let side = self.side();
        let mut dev: f64 = 0.0;
        for r in 0..side {
            for c in r..side {
                dev = dev.max((self.m[r * side + c] - self.m[c * side + r].conj()).norm());
            }
        }
        dev
    }

    /// `‖U†U − I‖_max`.
    pub fn unitary_deviation(&self) -> f64 {
        let side = self.side();
        let gram = self.adjoint().mul(self).expect("same labels");
        let mut dev: f64 = 0.0;
        for r in 0..side {
            for c in 0..side {
                let expect = if r == c { Complex64::ONE } else { Complex64::ZERO };
                dev = dev.max((gram.m[r * side + c] - expect).norm());
            }
        }
        dev
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Largest absolute entry difference; labels must match in order.
    pub fn max_abs_diff(&self, other: &Op) -> f64 {
        assert_eq!(self.labels, other.labels, "label mismatch");
        self.m
            .iter()
            .zip(&other.m)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.m.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl std::ops::Add for &Op {
    type Output = Op;

    fn add(self, rhs: &Op) -> Op {
        assert_eq!(self.labels, rhs.labels, "label mismatch");
        Op {
            labels: self.labels.clone(),
            m: self.m.iter().zip(&rhs.m).map(|(a, b)| a + b).collect(),
            density: None,
        }
    }
}

impl std::ops::Sub for &Op {
    type Output = Op;

    fn sub(self, rhs: &Op) -> Op {
        assert_eq!(self.labels, rhs.labels, "label mismatch");
        Op {
            labels: self.labels.clone(),
            m: self.m.iter().zip(&rhs.m).map(|(a, b)| a - b).collect(),
            density: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Qubit::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tensor_basis_states() {
        let t = Ket::basis(A, 0).tensor(&Ket::basis(B, 1)).unwrap();
        assert_eq!(t.labels(), &[A, B]);
        assert_eq!(t.amp(), &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    }

    #[test]
    fn tensor_identities() {
        let i2a = Op::identity(vec![A]).unwrap();
        let i2b = Op::identity(vec![B]).unwrap();
        let i4 = Op::identity(vec![A, B]).unwrap();
        assert!(i2a.tensor(&i2b).unwrap().max_abs_diff(&i4) == 0.0);
    }

    #[test]
    fn tensor_uniform_superposition() {
        let t = Ket::plus(A).tensor(&Ket::plus(B)).unwrap();
        for a in t.amp() {
            assert!((a - c(0.5, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn tensor_rejects_duplicate_labels() {
        let err = Ket::plus(A).tensor(&Ket::plus(A)).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel(A));
    }

    #[test]
    fn norm_multiplicative_under_tensor() {
        let a = Ket::new(vec![A], vec![c(0.3, 0.1), c(-0.2, 0.7)]).unwrap();
        let b = Ket::new(vec![B], vec![c(0.9, -0.4), c(0.0, 0.25)]).unwrap();
        let t = a.tensor(&b).unwrap();
        assert!((t.norm() - a.norm() * b.norm()).abs() < 1e-14);
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        let rho = Ket::bell_phi_minus(A, B).outer();
        let red = rho.partial_trace(&[A]).unwrap();
        let half = Op::identity(vec![A]).unwrap().scaled(c(0.5, 0.0));
        assert!(red.max_abs_diff(&half) < 1e-15);
        assert!((red.trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn partial_trace_of_product_factorizes() {
        let rho_a = Ket::new(vec![A], vec![c(0.6, 0.0), c(0.0, 0.8)])
            .unwrap()
            .outer();
        let rho_b = Ket::plus(B).outer();
        let prod = rho_a.tensor(&rho_b).unwrap();
        let red = prod.partial_trace(&[A]).unwrap();
        assert!(red.max_abs_diff(&rho_a.clone()) < 1e-14);
    }

    #[test]
    fn partial_trace_rejects_foreign_label() {
        let rho = Ket::bell_phi_minus(A, B).outer();
        assert_eq!(rho.partial_trace(&[C]).unwrap_err(), Error::MissingLabel(C));
    }

    #[test]
    fn partial_trace_requires_density_flag() {
        let op = Op::pauli_x(A).tensor(&Op::pauli_x(B)).unwrap();
        assert!(matches!(
            op.partial_trace(&[A]).unwrap_err(),
            Error::NotDensity(_)
        ));
    }

    #[test]
    fn permutation_swaps_factors() {
        let t = Ket::basis(A, 0).tensor(&Ket::basis(B, 1)).unwrap();
        let s = t.permuted(&[B, A]).unwrap();
        // |01⟩ on (A,B) is |10⟩ on (B,A)
        assert_eq!(s.amp()[2], c(1.0, 0.0));
    }

    #[test]
    fn projection_extracts_component() {
        let t = Ket::plus(A).tensor(&Ket::basis(B, 1)).unwrap();
        let got = t.project(B, &Ket::basis(B, 1)).unwrap();
        assert_eq!(got.labels(), &[A]);
        assert!(got.max_abs_diff(&Ket::plus(A)) < 1e-15);
        let gone = t.project(B, &Ket::basis(B, 0)).unwrap();
        assert!(gone.norm() < 1e-15);
    }

    #[test]
    fn density_flag_validates_trace() {
        let err = Ket::plus(A).outer().into_density(0.5).unwrap_err();
        assert!(matches!(err, Error::NotDensity(_)));
        assert!(Ket::plus(A).outer().into_density(1.0).is_ok());
    }

    #[test]
    fn density_flag_rejects_non_psd() {
        let m = Op::pauli_z(A);
        assert!(matches!(
            m.into_density(0.0).unwrap_err(),
            Error::NotPsd(_)
        ));
    }
}
