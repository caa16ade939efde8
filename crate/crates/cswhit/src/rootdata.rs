//! Root data for split reductive groups, with exact integer arithmetic.
//!
//! A root datum here is a pair of lattices `X^*` and `X_*` in fixed bases,
//! with the pairing given by the standard dot product, together with marked
//! simple roots in `X^*` and simple coroots in `X_*`. Construction validates
//! the Cartan matrix `C[i][j] = <alpha_i, alpha_j^vee>` (finite type, checked
//! through principal minors) and then eagerly computes the full root system,
//! the Weyl group, and the rho bookkeeping. After construction a `RootDatum`
//! is immutable, so everything downstream is deterministic lookups.
//!
//! Conventions that the rest of the crate relies on:
//!
//! * Reflections act on `X_*` by `s_i(v) = v - <alpha_i, v> alpha_i^vee` and
//!   on `X^*` by `s_i(x) = x - <x, alpha_i^vee> alpha_i`.
//! * Weyl elements are stored with their minimal-length, lexicographically
//!   smallest reduced word, and the group is listed by length then word.
//! * `rho` is tracked doubled: `two_rho` is the sum of the positive roots,
//!   so `<rho, v>` is exposed as the integer `<2 rho, v>` plus an exact
//!   rational accessor. Halves only ever appear in Laurent exponents.
//! * Dominance order on `X_*`: `a <= b` iff `b - a` is a nonnegative integer
//!   combination of simple coroots. Distinct cosets of the coroot lattice
//!   are incomparable.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, rat, IntMat, Rat};

// ---------------------------------------------------------------------------
// Lattice vectors

/// Cocharacter, written in the fixed basis of `X_*`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coweight(pub Vec<i64>);

/// Character lattice vector, written in the fixed basis of `X^*`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| k * a).collect())
    }
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// The canonical pairing `X^* x X_* -> Z`: dot product in the fixed bases.
pub fn pairing(x: &Weight, v: &Coweight) -> i64 {
    assert_eq!(x.0.len(), v.0.len(), "pairing across different ranks");
    x.0.iter().zip(&v.0).map(|(a, b)| a * b).sum()
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// Roots and Weyl elements

/// A root together with its coroot. `simple_coeffs` expands the root in the
/// simple-root basis; all coefficients share one sign, which is the sign of
/// the root.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub vector: Weight,
    pub coroot: Coweight,
    simple_coeffs: Vec<i64>,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.simple_coeffs.iter().any(|&c| c > 0)
    }

    /// Sum of the simple-root coefficients; positive roots have height >= 1.
    pub fn height(&self) -> i64 {
        self.simple_coeffs.iter().sum()
    }
}

/// Weyl group element: canonical reduced word plus its matrix on `X_*`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
    #[serde(skip)]
    pub(crate) matrix: IntMat,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

// ---------------------------------------------------------------------------
// Construction input

/// Finite Cartan types up to rank 8. The configured rank cap (default 4)
/// decides which of these a build will actually accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n)
            | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Cartan matrix with entries `C[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let bad = |msg: String| Err(Error::InvalidCartan(msg));
        match *self {
            CartanType::A(n) => {
                if n < 1 {
                    return bad("type A needs rank >= 1".into());
                }
                Ok(chain_matrix(n, &[]))
            }
            CartanType::B(n) => {
                if n < 2 {
                    return bad("type B needs rank >= 2".into());
                }
                // alpha_{n-1} long next to short alpha_n: <alpha_{n-1}, alpha_n^vee> = -2.
                Ok(chain_matrix(n, &[(n - 2, n - 1, -2)]))
            }
            CartanType::C(n) => {
                if n < 2 {
                    return bad("type C needs rank >= 2".into());
                }
                Ok(chain_matrix(n, &[(n - 1, n - 2, -2)]))
            }
            CartanType::D(n) => {
                if n < 4 {
                    return bad("type D needs rank >= 4".into());
                }
                let mut c = chain_matrix(n - 1, &[]);
                for row in &mut c {
                    row.push(0);
                }
                let mut last = vec![0; n];
                last[n - 1] = 2;
                c.push(last);
                // Fork: alpha_n attaches to alpha_{n-2}.
                c[n - 3][n - 1] = -1;
                c[n - 1][n - 3] = -1;
                Ok(c)
            }
            CartanType::E(n) => {
                if !(6..=8).contains(&n) {
                    return bad("type E needs rank 6, 7, or 8".into());
                }
                let mut c = chain_matrix(n - 1, &[]);
                for row in &mut c {
                    row.push(0);
                }
                let mut last = vec![0; n];
                last[n - 1] = 2;
                c.push(last);
                // Branch node is the third vertex of the chain.
                c[2][n - 1] = -1;
                c[n - 1][2] = -1;
                Ok(c)
            }
            CartanType::F4 => Ok(vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ]),
            CartanType::G2 => Ok(vec![vec![2, -1], vec![-3, 2]]),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidCartan(format!("cannot parse Cartan type {s:?}"));
        let (letter, num) = s.split_at(1);
        let n: usize = num.parse().map_err(|_| bad())?;
        match letter {
            "A" | "a" => Ok(CartanType::A(n)),
            "B" | "b" => Ok(CartanType::B(n)),
            "C" | "c" => Ok(CartanType::C(n)),
            "D" | "d" => Ok(CartanType::D(n)),
            "E" | "e" => Ok(CartanType::E(n)),
            "F" | "f" if n == 4 => Ok(CartanType::F4),
            "G" | "g" if n == 2 => Ok(CartanType::G2),
            _ => Err(bad()),
        }
    }
}

fn chain_matrix(n: usize, overrides: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    for &(i, j, v) in overrides {
        c[i][j] = v;
    }
    c
}

/// Which lattice `X_*` carries, phrased by the isogeny type of the dual
/// group: `Adjoint` takes `X_*` to be the coroot lattice (the dual group is
/// adjoint and the irreducibles in play are its adjoint-type
/// representations), `SimplyConnected` takes `X_*` to be the full coweight
/// lattice (the dual group is simply connected).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeVariant {
    Adjoint,
    SimplyConnected,
}

/// Build-time limits. The rank cap keeps Cartan validation and Weyl
/// enumeration at desk scale; the Weyl cap (default 1152, the largest Weyl
/// group order at rank 4) aborts enumeration of anything unexpectedly large.
#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub rank_cap: usize,
    pub weyl_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            rank_cap: 4,
            weyl_cap: 1152,
        }
    }
}

// ---------------------------------------------------------------------------
// The datum

#[derive(Debug, Clone)]
pub struct RootDatum {
    name: String,
    rank: usize,
    simple_roots: Vec<Weight>,
    simple_coroots: Vec<Coweight>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    weyl: Vec<WeylElement>,
    two_rho: Weight,
    two_rho_co: Coweight,
    torsion_reps: Vec<Coweight>,
}

impl RootDatum {
    /// Build from a named Cartan type and a lattice variant.
    pub fn from_label(
        kind: CartanType,
        variant: LatticeVariant,
        name: &str,
        opts: &BuildOptions,
    ) -> Result<Self> {
        let r = kind.rank();
        if r > opts.rank_cap {
            return Err(Error::RankCap {
                rank: r,
                cap: opts.rank_cap,
            });
        }
        let cartan = kind.cartan_matrix()?;
        let (simple_roots, simple_coroots) = match variant {
            // X_* is the coroot lattice: coroots are the standard basis and
            // roots are the rows of the Cartan matrix.
            LatticeVariant::Adjoint => {
                let coroots: Vec<Coweight> = (0..r)
                    .map(|j| {
                        let mut v = vec![0; r];
                        v[j] = 1;
                        Coweight(v)
                    })
                    .collect();
                let roots: Vec<Weight> = cartan.iter().map(|row| Weight(row.clone())).collect();
                (roots, coroots)
            }
            // X_* is the coweight lattice: roots are the standard basis of
            // the dual and coroots are the columns of the Cartan matrix.
            LatticeVariant::SimplyConnected => {
                let roots: Vec<Weight> = (0..r)
                    .map(|i| {
                        let mut v = vec![0; r];
                        v[i] = 1;
                        Weight(v)
                    })
                    .collect();
                let coroots: Vec<Coweight> = (0..r)
                    .map(|j| Coweight((0..r).map(|i| cartan[i][j]).collect()))
                    .collect();
                (roots, coroots)
            }
        };
        Self::from_explicit_vectors(simple_roots, simple_coroots, name, opts)
    }

    /// Build from explicit simple roots and coroots in fixed bases.
    pub fn from_explicit(
        simple_roots: &[Vec<i64>],
        simple_coroots: &[Vec<i64>],
        name: &str,
        opts: &BuildOptions,
    ) -> Result<Self> {
        let roots = simple_roots.iter().cloned().map(Weight).collect();
        let coroots = simple_coroots.iter().cloned().map(Coweight).collect();
        Self::from_explicit_vectors(roots, coroots, name, opts)
    }

    fn from_explicit_vectors(
        simple_roots: Vec<Weight>,
        simple_coroots: Vec<Coweight>,
        name: &str,
        opts: &BuildOptions,
    ) -> Result<Self> {
        let r = simple_roots.len();
        if simple_coroots.len() != r {
            return Err(Error::InvalidCartan(format!(
                "{} simple roots but {} simple coroots",
                r,
                simple_coroots.len()
            )));
        }
        if r == 0 {
            return Err(Error::InvalidCartan("no simple roots given".into()));
        }
        let rank = simple_roots[0].0.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("zero-dimensional lattice".into()));
        }
        if simple_roots.iter().any(|x| x.0.len() != rank)
            || simple_coroots.iter().any(|v| v.0.len() != rank)
        {
            return Err(Error::InvalidCartan(
                "simple roots and coroots must all have the same length".into(),
            ));
        }
        if r > opts.rank_cap || rank > opts.rank_cap {
            return Err(Error::RankCap {
                rank: r.max(rank),
                cap: opts.rank_cap,
            });
        }

        // Cartan matrix and generalized-Cartan axioms.
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| pairing(&simple_roots[i], &simple_coroots[j]))
                    .collect()
            })
            .collect();
        #[allow(clippy::needless_range_loop)]
        for i in 0..r {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "<alpha_{i}, alpha_{i}^vee> = {} instead of 2",
                    cartan[i][i]
                )));
            }
            for j in 0..r {
                if i != j {
                    if cartan[i][j] > 0 {
                        return Err(Error::InvalidCartan(format!(
                            "off-diagonal entry C[{i}][{j}] = {} is positive",
                            cartan[i][j]
                        )));
                    }
                    if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                        return Err(Error::InvalidCartan(format!(
                            "C[{i}][{j}] and C[{j}][{i}] disagree about vanishing"
                        )));
                    }
                }
            }
        }
        // Finite type: every principal minor of a generalized Cartan matrix
        // of finite type is positive, and conversely.
        let full = IntMat::from_rows(&cartan);
        for mask in 1u32..(1 << r) {
            let idx: Vec<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
            let sub = IntMat::from_rows(
                &idx.iter()
                    .map(|&i| idx.iter().map(|&j| full.at(i, j)).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            );
            if sub.det() <= 0 {
                return Err(Error::InvalidCartan(format!(
                    "principal minor on rows {idx:?} is not positive; not finite type"
                )));
            }
        }
        // Simple roots and coroots must each be linearly independent.
        let root_vecs: Vec<Vec<i64>> = simple_roots.iter().map(|x| x.0.clone()).collect();
        let coroot_vecs: Vec<Vec<i64>> = simple_coroots.iter().map(|v| v.0.clone()).collect();
        if linalg::rank(&root_vecs) != r || linalg::rank(&coroot_vecs) != r {
            return Err(Error::InvalidCartan(
                "simple roots or coroots are linearly dependent".into(),
            ));
        }

        let mut datum = RootDatum {
            name: name.to_string(),
            rank,
            simple_roots,
            simple_coroots,
            cartan,
            roots: Vec::new(),
            weyl: Vec::new(),
            two_rho: Weight::zero(rank),
            two_rho_co: Coweight::zero(rank),
            torsion_reps: Vec::new(),
        };
        datum.close_roots();
        datum.enumerate_weyl(opts.weyl_cap)?;
        datum.compute_rho();
        datum.compute_torsion_reps();
        Ok(datum)
    }

    /// Closure of the simple roots under simple reflections, tracking the
    /// coroot and the simple-root coefficients alongside each vector.
    fn close_roots(&mut self) {
        let r = self.num_simple();
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut out: Vec<Root> = Vec::new();
        let mut frontier: Vec<Root> = (0..r)
            .map(|i| {
                let mut coeffs = vec![0i64; r];
                coeffs[i] = 1;
                Root {
                    vector: self.simple_roots[i].clone(),
                    coroot: self.simple_coroots[i].clone(),
                    simple_coeffs: coeffs,
                }
            })
            .collect();
        for root in &frontier {
            seen.insert(root.vector.clone());
        }
        while let Some(root) = frontier.pop() {
            for j in 0..r {
                let c = pairing(&root.vector, &self.simple_coroots[j]);
                let c_co = pairing(&self.simple_roots[j], &root.coroot);
                let mut coeffs = root.simple_coeffs.clone();
                coeffs[j] -= c;
                let image = Root {
                    vector: Weight(
                        root.vector
                            .0
                            .iter()
                            .zip(&self.simple_roots[j].0)
                            .map(|(a, b)| a - c * b)
                            .collect(),
                    ),
                    coroot: Coweight(
                        root.coroot
                            .0
                            .iter()
                            .zip(&self.simple_coroots[j].0)
                            .map(|(a, b)| a - c_co * b)
                            .collect(),
                    ),
                    simple_coeffs: coeffs,
                };
                if seen.insert(image.vector.clone()) {
                    frontier.push(image.clone());
                }
            }
            out.push(root);
        }
        for root in &out {
            let pos = root.simple_coeffs.iter().all(|&c| c >= 0);
            let neg = root.simple_coeffs.iter().all(|&c| c <= 0);
            assert!(
                pos || neg,
                "root {:?} has mixed simple-root coefficients",
                root
            );
        }
        out.sort_by(|a, b| {
            (!a.is_positive(), a.height().abs(), &a.simple_coeffs).cmp(&(
                !b.is_positive(),
                b.height().abs(),
                &b.simple_coeffs,
            ))
        });
        self.roots = out;
    }

    /// Breadth-first enumeration over reduced words. Each element keeps the
    /// first word that reaches it, which by the traversal order is minimal
    /// in length and lexicographically smallest among those.
    fn enumerate_weyl(&mut self, cap: usize) -> Result<()> {
        let r = self.num_simple();
        let n = self.rank;
        let refl: Vec<IntMat> = (0..r)
            .map(|i| {
                let mut m = IntMat::identity(n);
                for row in 0..n {
                    for col in 0..n {
                        m.data[row * n + col] -=
                            self.simple_coroots[i].0[row] * self.simple_roots[i].0[col];
                    }
                }
                m
            })
            .collect();
        let mut elements = vec![WeylElement {
            word: Vec::new(),
            matrix: IntMat::identity(n),
        }];
        let mut seen: BTreeMap<IntMat, usize> = BTreeMap::new();
        seen.insert(elements[0].matrix.clone(), 0);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &idx in &frontier {
                for (i, refl_i) in refl.iter().enumerate() {
                    let m = elements[idx].matrix.mul(refl_i);
                    if seen.contains_key(&m) {
                        continue;
                    }
                    if elements.len() >= cap {
                        return Err(Error::WeylCap { cap });
                    }
                    let mut word = elements[idx].word.clone();
                    word.push(i);
                    seen.insert(m.clone(), elements.len());
                    next.push(elements.len());
                    elements.push(WeylElement { word, matrix: m });
                }
            }
            frontier = next;
        }
        self.weyl = elements;
        Ok(())
    }

    fn compute_rho(&mut self) {
        let mut two_rho = Weight::zero(self.rank);
        let mut two_rho_co = Coweight::zero(self.rank);
        for root in self.roots.iter().filter(|r| r.is_positive()) {
            two_rho = two_rho.add(&root.vector);
            two_rho_co = two_rho_co.add(&root.coroot);
        }
        self.two_rho = two_rho;
        self.two_rho_co = two_rho_co;
    }

    /// Canonical representatives of `(X_* cap Q-span of coroots) / Z-span`.
    /// Every coset has a representative `sum q_i alpha_i^vee` with all
    /// `q_i` in `[0, 1)`, and the coordinates of such a point are bounded by
    /// the column sums of the coroot matrix; enumerating that box finds all
    /// of them.
    fn compute_torsion_reps(&mut self) {
        let columns: Vec<Vec<i64>> = self.simple_coroots.iter().map(|v| v.0.clone()).collect();
        let bounds: Vec<i64> = (0..self.rank)
            .map(|j| columns.iter().map(|c| c[j].abs()).sum())
            .collect();
        let mut reps: BTreeSet<Coweight> = BTreeSet::new();
        let mut point = vec![0i64; self.rank];
        self.torsion_box(&columns, &bounds, &mut point, 0, &mut reps);
        self.torsion_reps = reps.into_iter().collect();
    }

    fn torsion_box(
        &self,
        columns: &[Vec<i64>],
        bounds: &[i64],
        point: &mut Vec<i64>,
        j: usize,
        reps: &mut BTreeSet<Coweight>,
    ) {
        if j == self.rank {
            if let Some(q) = linalg::solve_columns(columns, point) {
                let rep: Vec<i64> = (0..self.rank)
                    .map(|k| {
                        let mut val = point[k] as i128;
                        for (i, qi) in q.iter().enumerate() {
                            val -= qi.floor().to_integer() * columns[i][k] as i128;
                        }
                        i64::try_from(val).expect("torsion representative overflow")
                    })
                    .collect();
                reps.insert(Coweight(rep));
            }
            return;
        }
        for v in -bounds[j]..=bounds[j] {
            point[j] = v;
            self.torsion_box(columns, bounds, point, j + 1, reps);
        }
        point[j] = 0;
    }

    // -- accessors ----------------------------------------------------------

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_simple(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn is_semisimple(&self) -> bool {
        self.num_simple() == self.rank
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &Coweight {
        &self.simple_coroots[i]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn identity(&self) -> &WeylElement {
        &self.weyl[0]
    }

    pub fn two_rho(&self) -> &Weight {
        &self.two_rho
    }

    pub fn two_rho_co(&self) -> &Coweight {
        &self.two_rho_co
    }

    /// `<2 rho, v>`, always an integer.
    pub fn rho_pairing2(&self, v: &Coweight) -> i64 {
        pairing(&self.two_rho, v)
    }

    /// `<rho, v>` as an exact rational.
    pub fn rho_pairing(&self, v: &Coweight) -> Rat {
        Rat::new(self.rho_pairing2(v) as i128, 2)
    }

    // -- Weyl action --------------------------------------------------------

    pub fn apply_to_coweight(&self, w: &WeylElement, v: &Coweight) -> Coweight {
        Coweight(w.matrix.apply(&v.0))
    }

    /// Apply a Weyl element to a character-lattice vector by unwinding its
    /// word; the rightmost letter acts first.
    pub fn apply_to_weight(&self, w: &WeylElement, x: &Weight) -> Weight {
        let mut out = x.clone();
        for &i in w.word.iter().rev() {
            let c = pairing(&out, &self.simple_coroots[i]);
            out = Weight(
                out.0
                    .iter()
                    .zip(&self.simple_roots[i].0)
                    .map(|(a, b)| a - c * b)
                    .collect(),
            );
        }
        out
    }

    pub fn simple_reflect_coweight(&self, i: usize, v: &Coweight) -> Coweight {
        let c = pairing(&self.simple_roots[i], v);
        Coweight(
            v.0.iter()
                .zip(&self.simple_coroots[i].0)
                .map(|(a, b)| a - c * b)
                .collect(),
        )
    }

    pub fn simple_reflect_weight(&self, i: usize, x: &Weight) -> Weight {
        let c = pairing(x, &self.simple_coroots[i]);
        Weight(
            x.0.iter()
                .zip(&self.simple_roots[i].0)
                .map(|(a, b)| a - c * b)
                .collect(),
        )
    }

    /// Full Weyl orbit of a cocharacter, sorted lexicographically. This
    /// fixed order is what path enumeration and report output iterate in.
    pub fn weyl_orbit(&self, v: &Coweight) -> Vec<Coweight> {
        let mut seen: BTreeSet<Coweight> = BTreeSet::new();
        let mut stack = vec![v.clone()];
        seen.insert(v.clone());
        while let Some(u) = stack.pop() {
            for i in 0..self.num_simple() {
                let img = self.simple_reflect_coweight(i, &u);
                if seen.insert(img.clone()) {
                    stack.push(img);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn weyl_orbit_weight(&self, x: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut stack = vec![x.clone()];
        seen.insert(x.clone());
        while let Some(u) = stack.pop() {
            for i in 0..self.num_simple() {
                let img = self.simple_reflect_weight(i, &u);
                if seen.insert(img.clone()) {
                    stack.push(img);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn orbit_stabilizer_order(&self, v: &Coweight) -> usize {
        let orbit = self.weyl_orbit(v).len();
        assert_eq!(self.weyl_order() % orbit, 0, "orbit size must divide |W|");
        self.weyl_order() / orbit
    }

    // -- dominance ----------------------------------------------------------

    pub fn is_dominant(&self, v: &Coweight) -> bool {
        (0..self.num_simple()).all(|i| pairing(&self.simple_roots[i], v) >= 0)
    }

    /// `a <= b` in the dominance order: `b - a` is a nonnegative integer
    /// combination of simple coroots. Vectors outside the rational coroot
    /// span, or with fractional or negative coefficients, are incomparable.
    pub fn dominance_leq(&self, a: &Coweight, b: &Coweight) -> bool {
        let diff: Vec<i64> = b.0.iter().zip(&a.0).map(|(x, y)| x - y).collect();
        let columns: Vec<Vec<i64>> = self.simple_coroots.iter().map(|v| v.0.clone()).collect();
        match linalg::solve_columns(&columns, &diff) {
            None => false,
            Some(coeffs) => coeffs.iter().all(|c| c.is_integer() && *c >= rat(0)),
        }
    }

    /// Dominant member of the orbit, by greedy ascent. Internal workhorse;
    /// the public operation below also reports the minimal Weyl element.
    pub fn dominant_value(&self, v: &Coweight) -> Coweight {
        let mut cur = v.clone();
        loop {
            match (0..self.num_simple()).find(|&i| pairing(&self.simple_roots[i], &cur) < 0) {
                None => return cur,
                Some(i) => cur = self.simple_reflect_coweight(i, &cur),
            }
        }
    }

    /// Dominant representative together with the unique minimal-length
    /// `w` such that `w v` is dominant (ties in length broken by the
    /// lexicographic order on canonical words, which the stored group
    /// listing already realizes).
    pub fn dominant_representative(&self, v: &Coweight) -> (Coweight, WeylElement) {
        let target = self.dominant_value(v);
        for w in &self.weyl {
            if self.apply_to_coweight(w, v) == target {
                return (target, w.clone());
            }
        }
        unreachable!("orbit enumeration must reach the dominant value");
    }

    pub fn antidominant_value(&self, v: &Coweight) -> Coweight {
        self.dominant_value(&v.neg()).neg()
    }

    /// All dominant `mu <= lambda` (including `lambda`), sorted. Finite
    /// because subtracting a simple coroot lowers `<2 rho, .>` by two and
    /// dominant cocharacters pair nonnegatively with `2 rho`.
    pub fn dominant_below(&self, lambda: &Coweight) -> Result<Vec<Coweight>> {
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.clone()));
        }
        let budget = self.rho_pairing2(lambda).max(0) / 2;
        let r = self.num_simple();
        let mut out: BTreeSet<Coweight> = BTreeSet::new();
        let mut coeffs = vec![0i64; r];
        self.dominant_below_rec(lambda, budget, &mut coeffs, 0, &mut out);
        Ok(out.into_iter().collect())
    }

    fn dominant_below_rec(
        &self,
        lambda: &Coweight,
        budget: i64,
        coeffs: &mut Vec<i64>,
        idx: usize,
        out: &mut BTreeSet<Coweight>,
    ) {
        if idx == coeffs.len() {
            let mut mu = lambda.clone();
            for (i, &c) in coeffs.iter().enumerate() {
                mu = mu.sub(&self.simple_coroots[i].scale(c));
            }
            if self.is_dominant(&mu) {
                out.insert(mu);
            }
            return;
        }
        for c in 0..=budget {
            coeffs[idx] = c;
            self.dominant_below_rec(lambda, budget - c, coeffs, idx + 1, out);
        }
        coeffs[idx] = 0;
    }

    /// All dominant cocharacters with `<2 rho, v> <= bound`, sorted. Only
    /// defined for semisimple data, where the dominant cone is pointed.
    pub fn dominant_up_to_height(&self, bound: i64) -> Result<Vec<Coweight>> {
        if !self.is_semisimple() {
            return Err(Error::PreconditionViolated(
                "height enumeration needs a semisimple datum".into(),
            ));
        }
        let r = self.num_simple();
        let root_cols: Vec<Vec<i64>> = (0..self.rank)
            .map(|k| (0..r).map(|i| self.simple_roots[i].0[k]).collect())
            .collect();
        // Fundamental coweights: solve <alpha_i, w_j> = delta_ij.
        let mut fundamental: Vec<Vec<Rat>> = Vec::with_capacity(r);
        for j in 0..r {
            let mut e = vec![0i64; r];
            e[j] = 1;
            let sol = linalg::solve_columns(&root_cols, &e)
                .expect("independent simple roots always admit fundamental coweights");
            fundamental.push(sol);
        }
        let heights: Vec<Rat> = (0..r)
            .map(|j| {
                (0..self.rank)
                    .map(|k| rat(self.two_rho.0[k]) * fundamental[j][k])
                    .sum()
            })
            .collect();
        let mut out: BTreeSet<Coweight> = BTreeSet::new();
        let mut m = vec![0i64; r];
        self.height_box_rec(bound, &fundamental, &heights, &mut m, 0, rat(0), &mut out);
        Ok(out.into_iter().collect())
    }

    #[allow(clippy::too_many_arguments)]
    fn height_box_rec(
        &self,
        bound: i64,
        fundamental: &[Vec<Rat>],
        heights: &[Rat],
        m: &mut Vec<i64>,
        idx: usize,
        used: Rat,
        out: &mut BTreeSet<Coweight>,
    ) {
        if used > rat(bound) {
            return;
        }
        if idx == m.len() {
            let mut coords = vec![rat(0); self.rank];
            for (j, &mj) in m.iter().enumerate() {
                for k in 0..self.rank {
                    coords[k] += rat(mj) * fundamental[j][k];
                }
            }
            if coords.iter().all(|c| c.is_integer()) {
                out.insert(Coweight(
                    coords
                        .iter()
                        .map(|c| i64::try_from(c.to_integer()).expect("height box overflow"))
                        .collect(),
                ));
            }
            return;
        }
        let mut k = 0i64;
        loop {
            let next = used + rat(k) * heights[idx];
            if next > rat(bound) {
                break;
            }
            m[idx] = k;
            self.height_box_rec(bound, fundamental, heights, m, idx + 1, next, out);
            k += 1;
        }
        m[idx] = 0;
    }

    // -- minimal dominant cocharacters --------------------------------------

    /// The minimal elements of the nonzero dominant cocharacters under the
    /// dominance order, each classified. Seeds for the downward search are
    /// the dominant representatives of the simple coroots together with the
    /// dominant representatives of the nonzero torsion cosets of
    /// `X_* / Z Phi^vee`; every minimal element lies below one of these.
    pub fn classify_minimal(&self) -> Vec<MinimalCocharacter> {
        let mut seeds: BTreeSet<Coweight> = BTreeSet::new();
        for i in 0..self.num_simple() {
            seeds.insert(self.dominant_value(&self.simple_coroots[i]));
        }
        for rep in &self.torsion_reps {
            if !rep.is_zero() {
                seeds.insert(self.dominant_value(rep));
            }
        }
        let mut candidates: BTreeSet<Coweight> = BTreeSet::new();
        for seed in &seeds {
            for mu in self
                .dominant_below(seed)
                .expect("seeds are dominant by construction")
            {
                if !mu.is_zero() {
                    candidates.insert(mu);
                }
            }
        }
        let minimal: Vec<Coweight> = candidates
            .iter()
            .filter(|m| {
                !candidates
                    .iter()
                    .any(|u| u != *m && self.dominance_leq(u, m))
            })
            .cloned()
            .collect();
        let mut out: Vec<MinimalCocharacter> = minimal
            .into_iter()
            .map(|value| {
                let big: Vec<&Root> = self
                    .roots
                    .iter()
                    .filter(|root| pairing(&root.vector, &value) >= 2)
                    .collect();
                match big.len() {
                    0 => MinimalCocharacter {
                        value,
                        kind: MinimalKind::Minuscule,
                        coroot_root: None,
                    },
                    1 => {
                        let gamma = big[0].clone();
                        assert_eq!(
                            gamma.coroot, value,
                            "quasi-minuscule cocharacter must be the coroot of its root"
                        );
                        MinimalCocharacter {
                            value,
                            kind: MinimalKind::QuasiMinuscule,
                            coroot_root: Some(gamma),
                        }
                    }
                    _ => unreachable!(
                        "a minimal dominant cocharacter pairs >= 2 with at most one root"
                    ),
                }
            })
            .collect();
        out.sort_by_key(|m| (self.rho_pairing2(&m.value), m.value.clone()));
        out
    }

    /// Just the values of the minimal set, in the classification order.
    pub fn minimal_set(&self) -> Vec<Coweight> {
        self.classify_minimal()
            .into_iter()
            .map(|m| m.value)
            .collect()
    }

    pub fn is_minimal(&self, lambda: &Coweight) -> bool {
        self.minimal_set().contains(lambda)
    }

    /// The root `lambda^vee` attached to a quasi-minuscule cocharacter: the
    /// unique root pairing at least 2 with it.
    pub fn quasi_minuscule_root(&self, lambda: &Coweight) -> Result<Root> {
        for m in self.classify_minimal() {
            if &m.value == lambda {
                return match m.coroot_root {
                    Some(root) => Ok(root),
                    None => Err(Error::NotQuasiMinuscule(lambda.clone())),
                };
            }
        }
        Err(Error::NotQuasiMinuscule(lambda.clone()))
    }

    /// Simple roots Weyl-conjugate to `lambda^vee`, by index.
    pub fn delta_conjugates(&self, lambda: &Coweight) -> Result<Vec<usize>> {
        let gamma = self.quasi_minuscule_root(lambda)?;
        let orbit = self.weyl_orbit_weight(&gamma.vector);
        Ok((0..self.num_simple())
            .filter(|&i| orbit.contains(&self.simple_roots[i]))
            .collect())
    }

    /// The subset of `delta_conjugates` pairing at least 1 with `mu`.
    pub fn delta_mu(&self, lambda: &Coweight, mu: &Coweight) -> Result<Vec<usize>> {
        if !self.is_dominant(mu) {
            return Err(Error::NotDominant(mu.clone()));
        }
        Ok(self
            .delta_conjugates(lambda)?
            .into_iter()
            .filter(|&i| pairing(&self.simple_roots[i], mu) >= 1)
            .collect())
    }

    // -- misc ----------------------------------------------------------------

    /// Weyl-invariant symmetric form on `X_* (x) Q`, as the integer-valued
    /// sum over all roots of the products of pairings. Positive definite on
    /// the span of the coroots, zero on central directions.
    pub(crate) fn invariant_form(&self, u: &[i64], v: &[i64]) -> i64 {
        self.roots
            .iter()
            .map(|root| {
                let a: i64 = root.vector.0.iter().zip(u).map(|(x, y)| x * y).sum();
                let b: i64 = root.vector.0.iter().zip(v).map(|(x, y)| x * y).sum();
                a * b
            })
            .sum()
    }

    pub fn torsion_representatives(&self) -> &[Coweight] {
        &self.torsion_reps
    }

    /// Look up a root by its vector.
    pub fn root_by_vector(&self, x: &Weight) -> Option<&Root> {
        self.roots.iter().find(|r| &r.vector == x)
    }

    /// Resolve an arbitrary word in the simple reflections to the stored
    /// element with the same action, in its canonical form.
    pub fn element_by_word(&self, word: &[usize]) -> Option<&WeylElement> {
        let mut m = IntMat::identity(self.rank);
        for &i in word {
            if i >= self.num_simple() {
                return None;
            }
            let mut s = IntMat::identity(self.rank);
            for row in 0..self.rank {
                for col in 0..self.rank {
                    s.data[row * self.rank + col] -=
                        self.simple_coroots[i].0[row] * self.simple_roots[i].0[col];
                }
            }
            m = m.mul(&s);
        }
        self.weyl.iter().find(|w| w.matrix == m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalKind {
    Minuscule,
    QuasiMinuscule,
}

/// A minimal nonzero dominant cocharacter with its classification. The
/// attached root is present exactly in the quasi-minuscule case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimalCocharacter {
    pub value: Coweight,
    pub kind: MinimalKind,
    pub coroot_root: Option<Root>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn sl2() -> RootDatum {
        fixtures::fixture("SL2").unwrap()
    }

    fn a2adj() -> RootDatum {
        fixtures::fixture("A2adj").unwrap()
    }

    #[test]
    fn cartan_matrices_match_hand_values() {
        let a2 = CartanType::A(2).cartan_matrix().unwrap();
        assert_eq!(a2, vec![vec![2, -1], vec![-1, 2]]);
        let g2 = CartanType::G2.cartan_matrix().unwrap();
        assert_eq!(g2, vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn root_counts() {
        assert_eq!(sl2().num_roots(), 2);
        assert_eq!(a2adj().num_roots(), 6);
        assert_eq!(fixtures::fixture("G2").unwrap().num_roots(), 12);
        assert_eq!(fixtures::fixture("B2").unwrap().num_roots(), 8);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(sl2().weyl_order(), 2);
        assert_eq!(a2adj().weyl_order(), 6);
        assert_eq!(fixtures::fixture("B2").unwrap().weyl_order(), 8);
        assert_eq!(fixtures::fixture("C2").unwrap().weyl_order(), 8);
        assert_eq!(fixtures::fixture("G2").unwrap().weyl_order(), 12);
    }

    #[test]
    fn weyl_words_are_canonical_and_sorted() {
        let rd = a2adj();
        let mut prev: Option<(usize, Vec<usize>)> = None;
        for w in rd.weyl_group() {
            let key = (w.length(), w.word.clone());
            if let Some(p) = &prev {
                assert!(*p < key, "group listing must ascend by length then word");
            }
            prev = Some(key);
        }
        // Longest element of A2 has length 3.
        assert_eq!(rd.weyl_group().last().unwrap().length(), 3);
    }

    #[test]
    fn pairing_is_weyl_invariant() {
        let rd = fixtures::fixture("B2").unwrap();
        let x = Weight(vec![2, -1]);
        let v = Coweight(vec![1, 1]);
        for w in rd.weyl_group() {
            let wx = rd.apply_to_weight(w, &x);
            let wv = rd.apply_to_coweight(w, &v);
            assert_eq!(pairing(&wx, &wv), pairing(&x, &v));
        }
    }

    #[test]
    fn rho_pairings_match_frozen_values() {
        assert_eq!(sl2().rho_pairing2(&Coweight(vec![1])), 2);
        let pgl2 = fixtures::fixture("PGL2").unwrap();
        assert_eq!(pgl2.rho_pairing2(&Coweight(vec![1])), 1);
        assert_eq!(a2adj().rho_pairing2(&Coweight(vec![1, 1])), 4);
        // Doubled rho pairs to 2 with every simple coroot.
        for rd in fixtures::all_fixtures() {
            for i in 0..rd.num_simple() {
                assert_eq!(rd.rho_pairing2(rd.simple_coroot(i)), 2, "{}", rd.name());
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let rd = sl2();
        assert!(rd.dominance_leq(&Coweight(vec![0]), &Coweight(vec![1])));
        assert!(!rd.dominance_leq(&Coweight(vec![1]), &Coweight(vec![0])));
        let a2 = a2adj();
        assert!(a2.dominance_leq(&Coweight(vec![0, 0]), &Coweight(vec![1, 1])));
        // Off the rational coroot span or across cosets: incomparable.
        let pgl2 = fixtures::fixture("PGL2").unwrap();
        assert!(!pgl2.dominance_leq(&Coweight(vec![1]), &Coweight(vec![2])));
        assert!(pgl2.dominance_leq(&Coweight(vec![0]), &Coweight(vec![2])));
    }

    #[test]
    fn dominant_representative_is_minimal_first() {
        let rd = a2adj();
        let v = Coweight(vec![-1, -1]);
        let (dom, w) = rd.dominant_representative(&v);
        assert!(rd.is_dominant(&dom));
        assert_eq!(rd.apply_to_coweight(&w, &v), dom);
        // No shorter element reaches the dominant value.
        for u in rd.weyl_group() {
            if rd.apply_to_coweight(u, &v) == dom {
                assert!(u.length() >= w.length());
            }
        }
    }

    #[test]
    fn orbit_times_stabilizer_is_group_order() {
        for rd in fixtures::all_fixtures() {
            for i in 0..rd.num_simple() {
                let v = rd.simple_coroot(i).clone();
                let orbit = rd.weyl_orbit(&v);
                assert_eq!(orbit.len() * rd.orbit_stabilizer_order(&v), rd.weyl_order());
            }
        }
    }

    #[test]
    fn invalid_cartan_rejected() {
        // Positive off-diagonal entry.
        let err = RootDatum::from_explicit(
            &[vec![2, 1], vec![1, 2]],
            &[vec![1, 0], vec![0, 1]],
            "bad",
            &BuildOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidCartan(_)));
        // Affine A1: determinant zero, not finite type.
        let err = RootDatum::from_explicit(
            &[vec![2, -2], vec![-2, 2]],
            &[vec![1, 0], vec![0, 1]],
            "affine",
            &BuildOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidCartan(_)));
        // Rank beyond the cap.
        let err = RootDatum::from_label(
            CartanType::A(5),
            LatticeVariant::Adjoint,
            "big",
            &BuildOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::RankCap { .. }));
    }

    #[test]
    fn weyl_cap_respected() {
        let opts = BuildOptions {
            rank_cap: 4,
            weyl_cap: 5,
        };
        let err =
            RootDatum::from_label(CartanType::A(2), LatticeVariant::Adjoint, "cap", &opts)
                .unwrap_err();
        assert!(matches!(err, Error::WeylCap { cap: 5 }));
    }

    #[test]
    fn classify_minimal_per_fixture() {
        let sl2 = sl2();
        let m = sl2.classify_minimal();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].value, Coweight(vec![1]));
        assert_eq!(m[0].kind, MinimalKind::QuasiMinuscule);
        assert_eq!(m[0].coroot_root.as_ref().unwrap().vector, Weight(vec![2]));

        let a2 = a2adj();
        let m = a2.classify_minimal();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].value, Coweight(vec![1, 1]));
        assert_eq!(m[0].kind, MinimalKind::QuasiMinuscule);

        // The coweight lattice of A1 has a minuscule generator below the
        // coroot, and the coroot itself stays minimal in its own coset.
        let pgl2 = fixtures::fixture("PGL2").unwrap();
        let m = pgl2.classify_minimal();
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].value, Coweight(vec![1]));
        assert_eq!(m[0].kind, MinimalKind::Minuscule);
        assert_eq!(m[1].value, Coweight(vec![2]));
        assert_eq!(m[1].kind, MinimalKind::QuasiMinuscule);

        let b2 = fixtures::fixture("B2").unwrap();
        let kinds: Vec<MinimalKind> = b2.classify_minimal().iter().map(|m| m.kind).collect();
        assert_eq!(kinds, vec![MinimalKind::Minuscule, MinimalKind::QuasiMinuscule]);

        let g2 = fixtures::fixture("G2").unwrap();
        let m = g2.classify_minimal();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].kind, MinimalKind::QuasiMinuscule);
    }

    #[test]
    fn minuscule_pairings_stay_small() {
        for rd in fixtures::all_fixtures() {
            for m in rd.classify_minimal() {
                match m.kind {
                    MinimalKind::Minuscule => {
                        for root in rd.roots() {
                            assert!(pairing(&root.vector, &m.value).abs() <= 1);
                        }
                    }
                    MinimalKind::QuasiMinuscule => {
                        let count = rd
                            .roots()
                            .iter()
                            .filter(|r| pairing(&r.vector, &m.value) >= 2)
                            .count();
                        assert_eq!(count, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn delta_sets() {
        let sl2 = sl2();
        assert_eq!(sl2.delta_conjugates(&Coweight(vec![1])).unwrap(), vec![0]);
        assert_eq!(
            sl2.delta_mu(&Coweight(vec![1]), &Coweight(vec![0])).unwrap(),
            Vec::<usize>::new()
        );
        assert_eq!(
            sl2.delta_mu(&Coweight(vec![1]), &Coweight(vec![1])).unwrap(),
            vec![0]
        );

        let a2 = a2adj();
        assert_eq!(a2.delta_conjugates(&Coweight(vec![1, 1])).unwrap(), vec![0, 1]);

        // Only the long simple root of B2 is conjugate to the attached root
        // of the quasi-minuscule cocharacter.
        let b2 = fixtures::fixture("B2").unwrap();
        let qm = b2
            .classify_minimal()
            .into_iter()
            .find(|m| m.kind == MinimalKind::QuasiMinuscule)
            .unwrap();
        assert_eq!(b2.delta_conjugates(&qm.value).unwrap(), vec![0]);

        let err = sl2.delta_conjugates(&Coweight(vec![2])).unwrap_err();
        assert!(matches!(err, Error::NotQuasiMinuscule(_)));
    }

    #[test]
    fn dominant_below_and_height_boxes() {
        let sl2 = sl2();
        assert_eq!(
            sl2.dominant_below(&Coweight(vec![2])).unwrap(),
            vec![Coweight(vec![0]), Coweight(vec![1]), Coweight(vec![2])]
        );
        let a2 = a2adj();
        let below = a2.dominant_below(&Coweight(vec![1, 1])).unwrap();
        assert_eq!(below, vec![Coweight(vec![0, 0]), Coweight(vec![1, 1])]);
        let up4 = a2.dominant_up_to_height(4).unwrap();
        assert_eq!(up4, vec![Coweight(vec![0, 0]), Coweight(vec![1, 1])]);
        let pgl2 = fixtures::fixture("PGL2").unwrap();
        assert_eq!(pgl2.dominant_up_to_height(3).unwrap().len(), 4);
    }

    proptest! {
        #[test]
        fn dominance_is_a_partial_order(
            a in proptest::collection::vec(-4i64..=4, 2),
            b in proptest::collection::vec(-4i64..=4, 2),
            c in proptest::collection::vec(-4i64..=4, 2),
        ) {
            let rd = a2adj();
            let (a, b, c) = (Coweight(a), Coweight(b), Coweight(c));
            prop_assert!(rd.dominance_leq(&a, &a));
            if rd.dominance_leq(&a, &b) && rd.dominance_leq(&b, &a) {
                prop_assert_eq!(&a, &b);
            }
            if rd.dominance_leq(&a, &b) && rd.dominance_leq(&b, &c) {
                prop_assert!(rd.dominance_leq(&a, &c));
            }
        }

        #[test]
        fn orbit_is_closed_under_reflections(v in proptest::collection::vec(-3i64..=3, 2)) {
            let rd = fixtures::fixture("B2").unwrap();
            let v = Coweight(v);
            let orbit = rd.weyl_orbit(&v);
            for u in &orbit {
                for i in 0..rd.num_simple() {
                    prop_assert!(orbit.contains(&rd.simple_reflect_coweight(i, u)));
                }
            }
        }
    }
}
