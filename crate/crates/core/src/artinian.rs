//! Exact structure-constant engine for Artinian local algebras over ℚ and
//! their ℤ₂-graded idealizations A = R ×_φ M.
//!
//! An algebra is a rank-3 tensor of exact rationals over a basis whose first
//! element is the identity and whose remaining elements span the maximal
//! ideal; construction validates commutativity, associativity on every basis
//! triple, closure of the maximal-ideal subspace, and its nilpotence (the
//! locality certificate). The socle is an exact nullspace, its dimension the
//! Cohen-Macaulay type, and Gorensteinness is socle dimension one — never a
//! determinant shortcut, so the determinant criterion can be tested against
//! it independently.

use crate::linalg::{
    self, identity, is_zero_vec, mat_add, mat_mul, mat_vec, scale_mat, zeros, Rat, Subspace,
};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid algebra structure: {0}")]
    InvalidStructure(String),
    #[error("phi is not symmetric at basis pair ({0}, {1})")]
    PhiNotSymmetric(usize, usize),
    #[error("phi(x,y)z = phi(y,z)x fails at basis triple ({0}, {1}, {2})")]
    PhiAxiom2Violated(usize, usize, usize),
    #[error("phi takes a value outside the maximal ideal at ({0}, {1})")]
    PhiNotInMaxIdeal(usize, usize),
    #[error("module action is not an algebra homomorphism: {0}")]
    ModuleActionInvalid(String),
    #[error("the base algebra is not Gorenstein")]
    NotGorensteinBase,
    #[error("the given element does not span the socle")]
    NotSocle,
    #[error("the pairing matrix is not symmetric")]
    NotSymmetric,
    #[error("internal theorem violation: {0}")]
    TheoremViolation(String),
}

/// An Artinian local ℚ-algebra by structure constants. Basis element 0 is
/// the identity; elements 1..dim span the maximal ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    dim: usize,
    basis_labels: Vec<String>,
    /// structure[i][j] = coordinates of bᵢ·bⱼ
    structure: Vec<Vec<Vec<Rat>>>,
    /// left-multiplication matrices, one per basis element
    mult: Vec<Vec<Vec<Rat>>>,
}

impl FiniteAlgebra {
    pub fn new(
        basis_labels: Vec<String>,
        structure: Vec<Vec<Vec<Rat>>>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_labels.len();
        if dim == 0 {
            return Err(AlgebraError::InvalidStructure("empty basis".into()));
        }
        if structure.len() != dim
            || structure
                .iter()
                .any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
        {
            return Err(AlgebraError::InvalidStructure(
                "structure tensor shape does not match the basis".into(),
            ));
        }
        for i in 0..dim {
            for j in 0..dim {
                if structure[i][j] != structure[j][i] {
                    return Err(AlgebraError::InvalidStructure(format!(
                        "not commutative at ({i}, {j})"
                    )));
                }
            }
        }
        for j in 0..dim {
            let mut unit = zeros(dim);
            unit[j] = Rat::one();
            if structure[0][j] != unit {
                return Err(AlgebraError::InvalidStructure(format!(
                    "basis element 0 is not the identity on element {j}"
                )));
            }
        }
        // maximal ideal closure: products of non-unit elements stay there
        for i in 1..dim {
            for j in 1..dim {
                if !structure[i][j][0].is_zero() {
                    return Err(AlgebraError::InvalidStructure(format!(
                        "product of maximal-ideal elements {i}, {j} has a unit component"
                    )));
                }
            }
        }
        // associativity on basis triples, contracted against the (sparse)
        // structure tensor: (bᵢbⱼ)bₖ = bᵢ(bⱼbₖ)
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut lhs = zeros(dim);
                    for (l, c) in structure[i][j].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (o, v) in lhs.iter_mut().zip(&structure[l][k]) {
                            if !v.is_zero() {
                                *o += c * v;
                            }
                        }
                    }
                    let mut rhs = zeros(dim);
                    for (l, c) in structure[j][k].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (o, v) in rhs.iter_mut().zip(&structure[i][l]) {
                            if !v.is_zero() {
                                *o += c * v;
                            }
                        }
                    }
                    if lhs != rhs {
                        return Err(AlgebraError::InvalidStructure(format!(
                            "not associative at basis triple ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        // left multiplication matrices: mult[i] has column j = bᵢ·bⱼ
        let mult: Vec<Vec<Vec<Rat>>> = (0..dim)
            .map(|i| {
                let mut m = vec![zeros(dim); dim];
                for j in 0..dim {
                    for (k, row) in m.iter_mut().enumerate() {
                        row[j] = structure[i][j][k].clone();
                    }
                }
                m
            })
            .collect();
        let algebra = FiniteAlgebra {
            dim,
            basis_labels,
            structure,
            mult,
        };
        // locality certificate: the maximal-ideal subspace is nilpotent
        let mut power = Subspace::from_spanning(dim, algebra.maximal_ideal_basis());
        for _ in 0..dim + 1 {
            if power.dim() == 0 {
                return Ok(algebra);
            }
            let mut next = Vec::new();
            for v in power.basis() {
                for i in 1..dim {
                    next.push(mat_vec(&algebra.mult[i], v));
                }
            }
            power = Subspace::from_spanning(dim, next);
        }
        Err(AlgebraError::InvalidStructure(
            "maximal-ideal subspace is not nilpotent; the algebra is not local".into(),
        ))
    }

    /// `k[x]/(x^n)`: basis 1, x, …, x^(n−1).
    pub fn truncated_poly(n: usize) -> FiniteAlgebra {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let mut structure = vec![vec![zeros(n); n]; n];
        for (i, row) in structure.iter_mut().enumerate() {
            for (j, val) in row.iter_mut().enumerate() {
                if i + j < n {
                    val[i + j] = Rat::one();
                }
            }
        }
        FiniteAlgebra::new(labels, structure).expect("truncated polynomial algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn multiply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(&self.structure[i][j]) {
                    *o += xi * yj * c;
                }
            }
        }
        out
    }

    pub fn mult_matrix(&self, i: usize) -> &Vec<Vec<Rat>> {
        &self.mult[i]
    }

    pub fn unit(&self) -> Vec<Rat> {
        let mut e = zeros(self.dim);
        e[0] = Rat::one();
        e
    }

    fn maximal_ideal_basis(&self) -> Vec<Vec<Rat>> {
        (1..self.dim)
            .map(|i| {
                let mut v = zeros(self.dim);
                v[i] = Rat::one();
                v
            })
            .collect()
    }

    /// Socle (0):_A 𝔪 as the exact nullspace of the stacked multiplication
    /// maps by the maximal-ideal basis.
    pub fn socle(&self) -> Vec<Vec<Rat>> {
        let mut rows = Vec::new();
        for i in 1..self.dim {
            for r in &self.mult[i] {
                rows.push(r.clone());
            }
        }
        linalg::nullspace(&rows, self.dim)
    }

    pub fn cm_type(&self) -> usize {
        self.socle().len()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.cm_type() == 1
    }
}

/// A finite module over a [`FiniteAlgebra`]: one action matrix per algebra
/// basis element, the unit acting as the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    dim: usize,
    action: Vec<Vec<Vec<Rat>>>,
}

impl FiniteModule {
    pub fn new(algebra: &FiniteAlgebra, action: Vec<Vec<Vec<Rat>>>) -> Result<Self, AlgebraError> {
        if action.len() != algebra.dim {
            return Err(AlgebraError::ModuleActionInvalid(
                "one action matrix per algebra basis element is required".into(),
            ));
        }
        let dim = action[0].len();
        if action
            .iter()
            .any(|m| m.len() != dim || m.iter().any(|r| r.len() != dim))
        {
            return Err(AlgebraError::ModuleActionInvalid(
                "action matrices must be square of equal size".into(),
            ));
        }
        if action[0] != identity(dim) {
            return Err(AlgebraError::ModuleActionInvalid(
                "the unit must act as the identity".into(),
            ));
        }
        for i in 0..algebra.dim {
            for j in 0..algebra.dim {
                let lhs = mat_mul(&action[i], &action[j]);
                let mut rhs = vec![zeros(dim); dim];
                for k in 0..algebra.dim {
                    let c = &algebra.structure[i][j][k];
                    if !c.is_zero() {
                        rhs = mat_add(&rhs, &scale_mat(&action[k], c));
                    }
                }
                if lhs != rhs {
                    return Err(AlgebraError::ModuleActionInvalid(format!(
                        "action is not multiplicative at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(FiniteModule { dim, action })
    }

    /// The free module of rank one (the algebra acting on itself).
    pub fn regular(algebra: &FiniteAlgebra) -> FiniteModule {
        FiniteModule::new(algebra, algebra.mult.clone()).expect("regular module is valid")
    }

    /// k^s with the maximal ideal acting by zero.
    pub fn residue_power(algebra: &FiniteAlgebra, s: usize) -> FiniteModule {
        let mut action = vec![vec![zeros(s); s]; algebra.dim];
        action[0] = identity(s);
        FiniteModule::new(algebra, action).expect("residue-field power is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Vec<Vec<Rat>> {
        &self.action[i]
    }

    pub fn apply(&self, a: &[Rat], x: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let ax = mat_vec(&self.action[i], x);
            for (o, v) in out.iter_mut().zip(ax) {
                *o += ai * v;
            }
        }
        out
    }

    /// Ann_R M as a subspace of the algebra.
    pub fn annihilator(&self, algebra: &FiniteAlgebra) -> Vec<Vec<Rat>> {
        // a ∈ R kills M iff Σ_i a_i·action_i[k][j] = 0 for all k, j
        let mut rows = Vec::new();
        for k in 0..self.dim {
            for j in 0..self.dim {
                let row: Vec<Rat> = (0..algebra.dim)
                    .map(|i| self.action[i][k][j].clone())
                    .collect();
                rows.push(row);
            }
        }
        linalg::nullspace(&rows, algebra.dim)
    }

    /// (0):_M 𝔪 as a subspace of the module.
    pub fn socle_of_module(&self, algebra: &FiniteAlgebra) -> Vec<Vec<Rat>> {
        let mut rows = Vec::new();
        for i in 1..algebra.dim {
            for r in &self.action[i] {
                rows.push(r.clone());
            }
        }
        linalg::nullspace(&rows, self.dim)
    }
}

/// A symmetric bilinear form φ: M × M → 𝔪 ⊆ R satisfying
/// φ(x, y)z = φ(y, z)x, given by its values on module basis pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    /// values[i][j] = φ(eᵢ, eⱼ) as coordinates in the algebra
    values: Vec<Vec<Vec<Rat>>>,
}

impl BilinearForm {
    pub fn new(
        algebra: &FiniteAlgebra,
        module: &FiniteModule,
        values: Vec<Vec<Vec<Rat>>>,
    ) -> Result<Self, AlgebraError> {
        let s = module.dim;
        if values.len() != s
            || values
                .iter()
                .any(|row| row.len() != s || row.iter().any(|v| v.len() != algebra.dim))
        {
            return Err(AlgebraError::InvalidStructure(
                "phi values must form an s×s array of algebra elements".into(),
            ));
        }
        for i in 0..s {
            for j in 0..s {
                if values[i][j] != values[j][i] {
                    return Err(AlgebraError::PhiNotSymmetric(i, j));
                }
                if !values[i][j][0].is_zero() {
                    return Err(AlgebraError::PhiNotInMaxIdeal(i, j));
                }
            }
        }
        let basis = |t: usize| {
            let mut v = zeros(s);
            v[t] = Rat::one();
            v
        };
        // φ(x, ay) = a·φ(x, y): phi must be well-defined against the action
        for a in 1..algebra.dim {
            for i in 0..s {
                for j in 0..s {
                    let ay = mat_vec(module.action(a), &basis(j));
                    let lhs = phi_apply(&values, &basis(i), &ay, algebra.dim);
                    let rhs = mat_vec(algebra.mult_matrix(a), &values[i][j]);
                    if lhs != rhs {
                        return Err(AlgebraError::ModuleActionInvalid(format!(
                            "phi is not bilinear over the action at (b{a}, e{i}, e{j})"
                        )));
                    }
                }
            }
        }
        // φ(x, y)z = φ(y, z)x on basis triples
        for i in 0..s {
            for j in 0..s {
                for k in 0..s {
                    let lhs = module.apply(&values[i][j], &basis(k));
                    let rhs = module.apply(&values[j][k], &basis(i));
                    if lhs != rhs {
                        return Err(AlgebraError::PhiAxiom2Violated(i, j, k));
                    }
                }
            }
        }
        Ok(BilinearForm { values })
    }

    pub fn zero(algebra: &FiniteAlgebra, module: &FiniteModule) -> BilinearForm {
        let s = module.dim;
        BilinearForm {
            values: vec![vec![zeros(algebra.dim); s]; s],
        }
    }

    pub fn value(&self, i: usize, j: usize) -> &Vec<Rat> {
        &self.values[i][j]
    }

    pub fn apply(&self, x: &[Rat], y: &[Rat], algebra_dim: usize) -> Vec<Rat> {
        phi_apply(&self.values, x, y, algebra_dim)
    }

    /// The radical M_φ = {x : φ(x, ·) = 0} as an exact nullspace.
    pub fn radical(&self, algebra: &FiniteAlgebra) -> Vec<Vec<Rat>> {
        let s = self.values.len();
        let mut rows = Vec::new();
        for j in 0..s {
            for r in 0..algebra.dim {
                let row: Vec<Rat> = (0..s).map(|i| self.values[i][j][r].clone()).collect();
                rows.push(row);
            }
        }
        linalg::nullspace(&rows, s)
    }
}

fn phi_apply(values: &[Vec<Vec<Rat>>], x: &[Rat], y: &[Rat], algebra_dim: usize) -> Vec<Rat> {
    let mut out = zeros(algebra_dim);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(&values[i][j]) {
                *o += xi * yj * c;
            }
        }
    }
    out
}

/// A Z₂-graded idealization A = R ×_φ M, carrying the triad it was built
/// from so socle decomposition, the Gorenstein dichotomy, and the dual
/// module can be computed without rebuilding A.
#[derive(Debug, Clone)]
pub struct Idealization {
    base: FiniteAlgebra,
    module: FiniteModule,
    phi: BilinearForm,
    algebra: FiniteAlgebra,
}

impl Idealization {
    pub fn new(
        base: &FiniteAlgebra,
        module: &FiniteModule,
        phi: &BilinearForm,
    ) -> Result<Self, AlgebraError> {
        let algebra = idealize(base, module, phi)?;
        Ok(Idealization {
            base: base.clone(),
            module: module.clone(),
            phi: phi.clone(),
            algebra,
        })
    }

    pub fn base(&self) -> &FiniteAlgebra {
        &self.base
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn phi(&self) -> &BilinearForm {
        &self.phi
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn socle_decomposition(&self) -> (Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
        socle_decomposition(&self.base, &self.module, &self.phi)
    }

    /// Both branches of the Gorenstein dichotomy, checked against the socle
    /// computed directly on A.
    pub fn gorenstein_dichotomy(&self) -> Result<GorensteinReport, AlgebraError> {
        let cm_type = self.algebra.cm_type();
        let gorenstein = cm_type == 1;
        let faithful = self.module.annihilator(&self.base).is_empty();
        let branch_i = faithful && self.module.socle_of_module(&self.base).len() == 1;
        let branch_ii = self.base.is_gorenstein() && self.phi.radical(&self.base).is_empty();
        if gorenstein != (branch_i || branch_ii) {
            return Err(AlgebraError::TheoremViolation(format!(
                "Gorenstein dichotomy broken: socle gives {gorenstein}, branches give {branch_i}/{branch_ii}"
            )));
        }
        Ok(GorensteinReport {
            gorenstein,
            cm_type,
            branch_canonical_module: branch_i,
            branch_nondegenerate: branch_ii,
        })
    }

    /// The canonical module of A for Gorenstein R, as L = Hom_R(M, R) ⊕ R
    /// with the twisted action (a, x)·(f, k) = (af + ψ_{x,k}, f(x) + ak),
    /// ψ_{x,k}(y) = φ(x, y)k. Returns the A-module and μ_A(L), which equals
    /// the Cohen-Macaulay type of A.
    pub fn dual_module(&self) -> Result<(FiniteModule, usize), AlgebraError> {
        let algebra = &self.base;
        let module = &self.module;
        let phi = &self.phi;
        if !algebra.is_gorenstein() {
            return Err(AlgebraError::NotGorensteinBase);
        }
        let r = algebra.dim;
        let s = module.dim;
        // Hom_R(M, R): matrices F (r×s) with F·action_i = mult_i·F, flattened
        let unknowns = r * s;
        let mut rows = Vec::new();
        for i in 0..r {
            for a in 0..r {
                for bcol in 0..s {
                    // entry (a, bcol) of F·action_i − mult_i·F
                    let mut row = zeros(unknowns);
                    for t in 0..s {
                        row[a * s + t] += module.action(i)[t][bcol].clone();
                    }
                    for t in 0..r {
                        row[t * s + bcol] -= algebra.mult[i][a][t].clone();
                    }
                    rows.push(row);
                }
            }
        }
        let (hom_basis_flat, hom_free) = linalg::nullspace_with_free(&rows, unknowns);
        let h = hom_basis_flat.len();
        let ldim = h + r;
        let unflatten = |flat: &[Rat]| -> Vec<Vec<Rat>> {
            (0..r)
                .map(|a| (0..s).map(|b| flat[a * s + b].clone()).collect())
                .collect()
        };
        let homs: Vec<Vec<Vec<Rat>>> = hom_basis_flat.iter().map(|f| unflatten(f)).collect();
        // the nullspace basis is free-column normalized, so coordinates are
        // read off directly; reconstruction failure means the value was not
        // an R-homomorphism at all
        let express = |f_flat: Vec<Rat>| -> Result<Vec<Rat>, AlgebraError> {
            let coords: Vec<Rat> = hom_free.iter().map(|&c| f_flat[c].clone()).collect();
            let mut recon = zeros(unknowns);
            for (t, basis_vec) in hom_basis_flat.iter().enumerate() {
                if coords[t].is_zero() {
                    continue;
                }
                for (o, b) in recon.iter_mut().zip(basis_vec) {
                    if !b.is_zero() {
                        *o += &coords[t] * b;
                    }
                }
            }
            if recon != f_flat {
                return Err(AlgebraError::TheoremViolation(
                    "a twisted action value is not an R-homomorphism".into(),
                ));
            }
            Ok(coords)
        };

        // action of each A-basis element on L = Hom ⊕ R
        let adim = r + s;
        let mut action: Vec<Vec<Vec<Rat>>> = Vec::with_capacity(adim);
        for g in 0..adim {
            let mut m = vec![zeros(ldim); ldim];
            // image of basis hom F_t
            for (t, f) in homs.iter().enumerate() {
                let (img_hom, img_k): (Vec<Vec<Rat>>, Vec<Rat>) = if g < r {
                    // (a, 0)·(f, 0) = (af, 0)
                    (mat_mul(&algebra.mult[g], f), zeros(r))
                } else {
                    // (0, x)·(f, 0) = (0, f(x))
                    let x = g - r;
                    let fx: Vec<Rat> = (0..r).map(|a| f[a][x].clone()).collect();
                    (vec![zeros(s); r], fx)
                };
                let flat: Vec<Rat> = img_hom.into_iter().flatten().collect();
                let coords = express(flat)?;
                for (u, cval) in coords.into_iter().enumerate() {
                    m[u][t] = cval;
                }
                for (u, cval) in img_k.into_iter().enumerate() {
                    m[h + u][t] = cval;
                }
            }
            // image of basis element k of the R part
            for k in 0..r {
                let col = h + k;
                if g < r {
                    // (a, 0)·(0, k) = (0, ak)
                    let ak = &algebra.structure[g][k];
                    for u in 0..r {
                        m[h + u][col] = ak[u].clone();
                    }
                } else {
                    // (0, x)·(0, k) = (ψ_{x,k}, 0), ψ_{x,k}(y) = φ(x, y)·k
                    let x = g - r;
                    let mut psi = vec![zeros(s); r];
                    let mut kvec = zeros(r);
                    kvec[k] = Rat::one();
                    for y in 0..s {
                        let phik = algebra.multiply(&phi.values[x][y], &kvec);
                        for (a, val) in phik.into_iter().enumerate() {
                            psi[a][y] = val;
                        }
                    }
                    let flat: Vec<Rat> = psi.into_iter().flatten().collect();
                    let coords = express(flat)?;
                    for (u, cval) in coords.into_iter().enumerate() {
                        m[u][col] = cval;
                    }
                }
            }
            action.push(m);
        }

        let l = FiniteModule::new(&self.algebra, action).map_err(|e| {
            AlgebraError::TheoremViolation(format!("twisted dual action is not an A-action: {e}"))
        })?;
        // μ_A(L) = dim L − dim 𝔫L
        let mut span = Vec::new();
        for i in 1..self.algebra.dim {
            for col in 0..ldim {
                let mut v = zeros(ldim);
                v[col] = Rat::one();
                span.push(mat_vec(l.action(i), &v));
            }
        }
        let nl = Subspace::from_spanning(ldim, span);
        let mu = ldim - nl.dim();
        Ok((l, mu))
    }
}

/// A = R ×_φ M with basis (R basis, then M basis) and product
/// (a, x)(b, y) = (ab + φ(x, y), ay + bx).
pub fn idealize(
    algebra: &FiniteAlgebra,
    module: &FiniteModule,
    phi: &BilinearForm,
) -> Result<FiniteAlgebra, AlgebraError> {
    let r = algebra.dim;
    let s = module.dim;
    let n = r + s;
    let mut labels: Vec<String> = algebra.basis_labels.clone();
    for t in 0..s {
        labels.push(format!("e{t}"));
    }
    let mut structure = vec![vec![zeros(n); n]; n];
    let basis = |t: usize| {
        let mut v = zeros(s);
        v[t] = Rat::one();
        v
    };
    for i in 0..n {
        for j in 0..n {
            let val = &mut structure[i][j];
            match (i < r, j < r) {
                (true, true) => {
                    for (k, c) in algebra.structure[i][j].iter().enumerate() {
                        val[k] = c.clone();
                    }
                }
                (true, false) => {
                    let col = mat_vec(module.action(i), &basis(j - r));
                    for (k, c) in col.into_iter().enumerate() {
                        val[r + k] = c;
                    }
                }
                (false, true) => {
                    let col = mat_vec(module.action(j), &basis(i - r));
                    for (k, c) in col.into_iter().enumerate() {
                        val[r + k] = c;
                    }
                }
                (false, false) => {
                    for (k, c) in phi.values[i - r][j - r].iter().enumerate() {
                        val[k] = c.clone();
                    }
                }
            }
        }
    }
    FiniteAlgebra::new(labels, structure)
}

/// The two graded pieces of the socle of R ×_φ M:
/// [(0):_R 𝔪 ∩ Ann_R M] in R and [(0):_M 𝔪 ∩ M_φ] in M.
pub fn socle_decomposition(
    algebra: &FiniteAlgebra,
    module: &FiniteModule,
    phi: &BilinearForm,
) -> (Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
    let r = algebra.dim;
    let s = module.dim;
    // piece in R: 𝔪·a = 0 and a·M = 0
    let mut rows = Vec::new();
    for i in 1..r {
        for row in &algebra.mult[i] {
            rows.push(row.clone());
        }
    }
    for k in 0..s {
        for j in 0..s {
            rows.push(
                (0..r)
                    .map(|i| module.action(i)[k][j].clone())
                    .collect::<Vec<_>>(),
            );
        }
    }
    let piece_r = linalg::nullspace(&rows, r);
    // piece in M: 𝔪·x = 0 and φ(x, eⱼ) = 0
    let mut rows = Vec::new();
    for i in 1..r {
        for row in module.action(i) {
            rows.push(row.clone());
        }
    }
    for j in 0..s {
        for t in 0..r {
            rows.push(
                (0..s)
                    .map(|i| phi.values[i][j][t].clone())
                    .collect::<Vec<_>>(),
            );
        }
    }
    let piece_m = linalg::nullspace(&rows, s);
    (piece_r, piece_m)
}

/// Both branches of the Gorenstein dichotomy for A = R ×_φ M, checked
/// against the socle computed directly on A.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub gorenstein: bool,
    pub cm_type: usize,
    /// M is (isomorphic to) the canonical module: faithful of type 1.
    pub branch_canonical_module: bool,
    /// R is Gorenstein and the radical of φ vanishes.
    pub branch_nondegenerate: bool,
}

pub fn gorenstein_dichotomy(
    algebra: &FiniteAlgebra,
    module: &FiniteModule,
    phi: &BilinearForm,
) -> Result<GorensteinReport, AlgebraError> {
    Idealization::new(algebra, module, phi)?.gorenstein_dichotomy()
}

/// For a Gorenstein base R with socle generator ξ ∈ 𝔪 and a symmetric s×s
/// matrix C, the extension of R by M = k^s (with 𝔪M = 0) and pairing
/// φ(eᵢ, eⱼ) = cᵢⱼ·ξ. The resulting A is Gorenstein exactly when det C ≠ 0.
pub fn socle_pairing_extension(
    algebra: &FiniteAlgebra,
    xi: &[Rat],
    c: &[Vec<Rat>],
) -> Result<(FiniteModule, BilinearForm), AlgebraError> {
    if !algebra.is_gorenstein() || algebra.dim < 2 {
        return Err(AlgebraError::NotGorensteinBase);
    }
    if is_zero_vec(xi) || !xi[0].is_zero() {
        return Err(AlgebraError::NotSocle);
    }
    for i in 1..algebra.dim {
        if !is_zero_vec(&mat_vec(&algebra.mult[i], xi)) {
            return Err(AlgebraError::NotSocle);
        }
    }
    let s = c.len();
    if c.iter().any(|row| row.len() != s) {
        return Err(AlgebraError::NotSymmetric);
    }
    for i in 0..s {
        for j in 0..s {
            if c[i][j] != c[j][i] {
                return Err(AlgebraError::NotSymmetric);
            }
        }
    }
    let module = FiniteModule::residue_power(algebra, s);
    let values: Vec<Vec<Vec<Rat>>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| xi.iter().map(|x| x * &c[i][j]).collect())
                .collect()
        })
        .collect();
    let phi = BilinearForm::new(algebra, &module, values)?;
    Ok((module, phi))
}

/// The three-variable family over `k[x]/(x^2)`: basis 1, x, e₀, e₁ with
/// e₀² = a·x, e₀e₁ = b·x, e₁² = c·x and x annihilating both eᵢ.
pub fn preset_aaa48(a: Rat, b: Rat, c: Rat) -> Result<(FiniteAlgebra, FiniteModule, BilinearForm), AlgebraError> {
    let base = FiniteAlgebra::truncated_poly(2);
    let xi = vec![Rat::zero(), Rat::one()];
    let cm = vec![vec![a, b.clone()], vec![b, c]];
    let (module, phi) = socle_pairing_extension(&base, &xi, &cm)?;
    Ok((base, module, phi))
}

/// The canonical module of A = R ×_φ M for Gorenstein R; see
/// [`Idealization::dual_module`]. Returns the A-module and μ_A(L).
pub fn dual_module(
    algebra: &FiniteAlgebra,
    module: &FiniteModule,
    phi: &BilinearForm,
) -> Result<(FiniteModule, usize), AlgebraError> {
    Idealization::new(algebra, module, phi)?.dual_module()
}

/// JSON input document for an algebra/module/φ triple.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TriadInput {
    pub basis: Vec<String>,
    /// sparse entries c with bᵢ·bⱼ = Σ c_{ijk}·b_k
    pub structure_constants: Vec<StructureEntry>,
    pub module: Option<ModuleInput>,
    pub phi: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleInput {
    pub dim: usize,
    /// `actions[i]` is the matrix of bᵢ, rows of rational strings
    pub actions: Vec<Vec<Vec<String>>>,
}

fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    BigRational::from_str(s.trim())
        .map_err(|e| AlgebraError::InvalidStructure(format!("bad rational {s:?}: {e}")))
}

impl TriadInput {
    pub fn build(
        &self,
    ) -> Result<(FiniteAlgebra, Option<(FiniteModule, BilinearForm)>), AlgebraError> {
        let dim = self.basis.len();
        let mut structure = vec![vec![zeros(dim); dim]; dim];
        for e in &self.structure_constants {
            if e.i >= dim || e.j >= dim || e.k >= dim {
                return Err(AlgebraError::InvalidStructure(format!(
                    "structure index ({}, {}, {}) out of range",
                    e.i, e.j, e.k
                )));
            }
            structure[e.i][e.j][e.k] = parse_rat(&e.c)?;
            structure[e.j][e.i][e.k] = structure[e.i][e.j][e.k].clone();
        }
        let algebra = FiniteAlgebra::new(self.basis.clone(), structure)?;
        let extra = match (&self.module, &self.phi) {
            (Some(m), phi) => {
                let mut action = Vec::with_capacity(m.actions.len());
                for mat in &m.actions {
                    let mut out = Vec::with_capacity(mat.len());
                    for row in mat {
                        out.push(
                            row.iter()
                                .map(|x| parse_rat(x))
                                .collect::<Result<Vec<_>, _>>()?,
                        );
                    }
                    action.push(out);
                }
                let module = FiniteModule::new(&algebra, action)?;
                let phi = match phi {
                    Some(vals) => {
                        let mut out = Vec::with_capacity(vals.len());
                        for row in vals {
                            let mut orow = Vec::with_capacity(row.len());
                            for v in row {
                                orow.push(
                                    v.iter()
                                        .map(|x| parse_rat(x))
                                        .collect::<Result<Vec<_>, _>>()?,
                                );
                            }
                            out.push(orow);
                        }
                        BilinearForm::new(&algebra, &module, out)?
                    }
                    None => BilinearForm::zero(&algebra, &module),
                };
                Some((module, phi))
            }
            (None, _) => None,
        };
        Ok((algebra, extra))
    }
}
