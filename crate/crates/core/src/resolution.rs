//! Weighted dual graph of the minimal good resolution, the fundamental cycle
//! and the fundamental genus `p_f = p_a(Z_E)`.
//!
//! The graph is star-shaped: a central curve `E_0` of genus `g` and
//! self-intersection `-c_0`, with `g_w` copies of a chain `B_w` of rational
//! curves for each `w = 1, 2, 3`. The chain weights are the Hirzebruch-Jung
//! expansion of `alpha_w / beta_w`; the chain is empty when `alpha_w = 1`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::numtheory::{ceil_div, gcd, hj_expand, lcm, mod_inverse_negation, HjFraction, Rational};
use crate::ring::BrieskornTriple;

/// Seifert invariants of the link, indexed by `w = 1, 2, 3` at positions `0, 1, 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertData {
    /// `(a_1, a_2, a_3) = (a, b, c)`.
    pub exponents: [i64; 3],
    /// `l_w`: lcm of the two other exponents.
    pub lcms: [i64; 3],
    pub alpha: [i64; 3],
    pub lambda: [i64; 3],
    pub beta: [i64; 3],
    /// Number of copies of branch `B_w`: gcd of the two other exponents.
    pub copies: [i64; 3],
    /// `abc / lcm(a, b, c)`.
    pub copies_total: i64,
    /// `lcm(a, b, c)`.
    pub lcm_all: i64,
    /// Genus of the central curve.
    pub genus: i64,
    /// `-E_0^2`.
    pub c0: i64,
}

pub fn seifert_data(t: &BrieskornTriple) -> Result<SeifertData> {
    let (a, b, c) = t.exponents();
    let exponents = [a, b, c];
    let lcms = [lcm(b, c), lcm(a, c), lcm(a, b)];
    let copies = [gcd(b, c), gcd(a, c), gcd(a, b)];
    let mut alpha = [0; 3];
    let mut lambda = [0; 3];
    let mut beta = [0; 3];
    for w in 0..3 {
        let g = gcd(exponents[w], lcms[w]);
        alpha[w] = exponents[w] / g;
        lambda[w] = lcms[w] / g;
        beta[w] = mod_inverse_negation(lambda[w], alpha[w])?;
    }
    let lcm_all = lcm(lcm(a, b), c);
    let copies_total = t.degree() / lcm_all;

    let twice_genus_minus_two = copies_total - copies.iter().sum::<i64>();
    if twice_genus_minus_two % 2 != 0 || twice_genus_minus_two < -2 {
        return Err(Error::NonIntegral("central genus"));
    }
    let genus = twice_genus_minus_two / 2 + 1;

    let c0 = (0..3)
        .map(|w| Rational::new(i128::from(copies[w] * beta[w]), i128::from(alpha[w])))
        .sum::<Rational>()
        + Rational::new(i128::from(copies_total), i128::from(lcm_all));
    if !c0.is_integer() || c0 <= Rational::from_integer(0) {
        return Err(Error::NonIntegral("c_0"));
    }
    Ok(SeifertData {
        exponents,
        lcms,
        alpha,
        lambda,
        beta,
        copies,
        copies_total,
        lcm_all,
        genus,
        c0: *c0.numer() as i64,
    })
}

/// Position of a branch vertex: chain `B_w` (`w` in 1..=3), which copy, and
/// `position` (1-based) along the chain counted from the centre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchPosition {
    pub w: usize,
    pub copy: usize,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    /// `E_i^2`, always negative.
    pub self_intersection: i64,
    pub genus: i64,
    /// `None` for the central curve.
    pub branch: Option<BranchPosition>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    adjacency: Vec<Vec<usize>>,
    branches: [HjFraction; 3],
}

impl DualGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// The continued fraction shared by every copy of branch `B_w`.
    pub fn branch_fraction(&self, w: usize) -> &HjFraction {
        &self.branches[w - 1]
    }

    /// Number of chains attached to the centre (empty chains are not counted).
    pub fn attached_chains(&self) -> usize {
        self.adjacency[0].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn intersection(&self, i: usize, j: usize) -> i64 {
        if i == j {
            self.vertices[i].self_intersection
        } else {
            self.adjacency[i].iter().filter(|&&k| k == j).count() as i64
        }
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.len())
            .map(|i| (0..self.len()).map(|j| self.intersection(i, j)).collect())
            .collect()
    }

    /// Symmetric Gaussian elimination from the leaves towards the centre.
    ///
    /// The graph is a tree, so eliminating children before parents creates no
    /// fill-in and the pivots are exact rationals. The form is negative
    /// definite iff every pivot is negative (the leading principal minors in
    /// this order are the partial products of the pivots).
    pub fn elimination_pivots(&self) -> Vec<Rational> {
        let order = self.leaf_first_order();
        let mut pivot = vec![Rational::from_integer(0); self.len()];
        let mut parent = vec![usize::MAX; self.len()];
        for &v in order.iter().rev() {
            for &u in &self.adjacency[v] {
                if u != parent[v] {
                    parent[u] = v;
                }
            }
        }
        for &v in &order {
            let mut p = Rational::from_integer(i128::from(self.vertices[v].self_intersection));
            for &u in &self.adjacency[v] {
                if u != parent[v] {
                    p -= pivot[u].recip();
                }
            }
            pivot[v] = p;
        }
        order.iter().map(|&v| pivot[v]).collect()
    }

    pub fn is_negative_definite(&self) -> bool {
        self.edge_count() + 1 == self.len()
            && self
                .elimination_pivots()
                .iter()
                .all(|p| *p < Rational::from_integer(0))
    }

    /// Vertices ordered so that every vertex comes after all its descendants
    /// in the tree rooted at the centre.
    fn leaf_first_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        order.reverse();
        order
    }

    fn label(&self, i: usize) -> String {
        let v = &self.vertices[i];
        match v.branch {
            None => format!("E0 (g={}, {})", v.genus, v.self_intersection),
            Some(b) => format!("E{},{} ({})", b.w, b.position, v.self_intersection),
        }
    }

    /// Graphviz rendering; identical input always gives identical bytes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for i in 0..self.len() {
            writeln!(out, "  n{i} [label=\"{}\"];", self.label(i)).unwrap();
        }
        for i in 0..self.len() {
            for &j in &self.adjacency[i] {
                if i < j {
                    writeln!(out, "  n{i} -- n{j};").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Canonical JSON value (object keys sorted).
    pub fn to_json(&self) -> Value {
        #[derive(Serialize)]
        struct JsonVertex<'a> {
            id: usize,
            weight: i64,
            genus: i64,
            label: String,
            branch: Option<BranchPosition>,
            neighbors: &'a [usize],
        }
        #[derive(Serialize)]
        struct JsonBranch<'a> {
            w: usize,
            alpha: i64,
            beta: i64,
            expansion: &'a [i64],
        }
        #[derive(Serialize)]
        struct JsonGraph<'a> {
            vertices: Vec<JsonVertex<'a>>,
            branches: Vec<JsonBranch<'a>>,
        }
        let graph = JsonGraph {
            vertices: (0..self.len())
                .map(|i| JsonVertex {
                    id: i,
                    weight: self.vertices[i].self_intersection,
                    genus: self.vertices[i].genus,
                    label: self.label(i),
                    branch: self.vertices[i].branch,
                    neighbors: &self.adjacency[i],
                })
                .collect(),
            branches: (1..=3)
                .map(|w| {
                    let f = self.branch_fraction(w);
                    JsonBranch {
                        w,
                        alpha: f.numerator(),
                        beta: f.denominator(),
                        expansion: f.expansion(),
                    }
                })
                .collect(),
        };
        serde_json::to_value(graph).expect("graph serializes")
    }
}

/// Builds the star-shaped graph: centre first, then for `w = 1, 2, 3` each copy
/// of `B_w` with its chain positions in order.
pub fn build_dual_graph(sd: &SeifertData) -> Result<DualGraph> {
    let branches = [
        hj_expand(sd.alpha[0], sd.beta[0])?,
        hj_expand(sd.alpha[1], sd.beta[1])?,
        hj_expand(sd.alpha[2], sd.beta[2])?,
    ];
    let mut vertices = vec![Vertex {
        self_intersection: -sd.c0,
        genus: sd.genus,
        branch: None,
    }];
    let mut adjacency = vec![Vec::new()];
    for (w, fraction) in branches.iter().enumerate() {
        for copy in 0..sd.copies[w] as usize {
            let mut previous = 0;
            for (j, &weight) in fraction.expansion().iter().enumerate() {
                let id = vertices.len();
                vertices.push(Vertex {
                    self_intersection: -weight,
                    genus: 0,
                    branch: Some(BranchPosition {
                        w: w + 1,
                        copy,
                        position: j + 1,
                    }),
                });
                adjacency.push(vec![previous]);
                adjacency[previous].push(id);
                previous = id;
            }
        }
    }
    Ok(DualGraph {
        vertices,
        adjacency,
        branches,
    })
}

/// An integral cycle `sum_i z_i E_i` on a dual graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cycle {
    coefficients: Vec<i64>,
}

impl Cycle {
    pub fn new(coefficients: Vec<i64>) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// `Z . E_i`.
    pub fn pairing(&self, g: &DualGraph, i: usize) -> i64 {
        let own = self.coefficients[i] * g.vertices[i].self_intersection;
        own + g.adjacency[i]
            .iter()
            .map(|&j| self.coefficients[j])
            .sum::<i64>()
    }

    pub fn self_intersection(&self, g: &DualGraph) -> i64 {
        (0..g.len())
            .map(|i| self.coefficients[i] * self.pairing(g, i))
            .sum()
    }

    /// `Z . K` with `K . E_i = -E_i^2 + 2 g_i - 2`.
    pub fn canonical_pairing(&self, g: &DualGraph) -> i64 {
        g.vertices
            .iter()
            .zip(&self.coefficients)
            .map(|(v, z)| z * (-v.self_intersection + 2 * v.genus - 2))
            .sum()
    }

    /// `p_a(Z) = 1 + (Z^2 + Z.K)/2`.
    pub fn arithmetic_genus(&self, g: &DualGraph) -> Result<i64> {
        let twice = self.self_intersection(g) + self.canonical_pairing(g);
        if twice % 2 != 0 {
            return Err(Error::NonIntegral("arithmetic genus"));
        }
        Ok(1 + twice / 2)
    }

    pub fn is_anti_nef(&self, g: &DualGraph) -> bool {
        (0..g.len()).all(|i| self.pairing(g, i) <= 0)
    }
}

/// Laufer's computation sequence: start at `sum E_i` and add `E_i` for the
/// lowest-indexed `i` with `Z . E_i > 0` until the cycle is anti-nef.
///
/// The sequence terminates exactly when the form is negative definite, so that
/// is checked first.
pub fn fundamental_cycle(g: &DualGraph) -> Result<Cycle> {
    let n = g.len();
    if !g.is_negative_definite() {
        return Err(Error::NotNegativeDefinite(n as u64));
    }
    let mut z = Cycle::new(vec![1; n]);
    let mut pairing: Vec<i64> = (0..n).map(|i| z.pairing(g, i)).collect();
    let mut positive: BTreeSet<usize> = (0..n).filter(|&i| pairing[i] > 0).collect();
    while let Some(i) = positive.pop_first() {
        z.coefficients[i] += 1;
        pairing[i] += g.vertices[i].self_intersection;
        if pairing[i] > 0 {
            positive.insert(i);
        }
        for &j in &g.adjacency[i] {
            pairing[j] += 1;
            if pairing[j] > 0 {
                positive.insert(j);
            }
        }
    }
    Ok(z)
}

/// `p_a(Z_E)` computed on the graph.
pub fn fundamental_genus_oracle(g: &DualGraph) -> Result<i64> {
    fundamental_cycle(g)?.arithmetic_genus(g)
}

fn check_formula_range(sd: &SeifertData) -> Result<i64> {
    let alpha = sd.alpha.iter().product::<i64>();
    if sd.lambda[2] > alpha {
        return Err(Error::FormulaInapplicable {
            lambda3: sd.lambda[2],
            alpha,
        });
    }
    Ok(ceil_div(sd.lambda[2], sd.alpha[2]))
}

/// `-Z_E^2 = g_3 ceil(lambda_3/alpha_3)` when `lambda_3 <= alpha_1 alpha_2 alpha_3`.
pub fn neg_z_squared_formula(t: &BrieskornTriple) -> Result<i64> {
    let sd = seifert_data(t)?;
    Ok(sd.copies[2] * check_formula_range(&sd)?)
}

/// `p_f = (ab - a - b - (2 ceil(lambda_3/alpha_3) - 1) gcd(a,b))/2 + 1`
/// when `lambda_3 <= alpha_1 alpha_2 alpha_3`.
pub fn fundamental_genus_formula(t: &BrieskornTriple) -> Result<i64> {
    let sd = seifert_data(t)?;
    let ceiling = check_formula_range(&sd)?;
    let (a, b, _) = t.exponents();
    let twice = a * b - a - b - (2 * ceiling - 1) * gcd(a, b);
    if twice % 2 != 0 {
        return Err(Error::NonIntegral("closed-form fundamental genus"));
    }
    Ok(twice / 2 + 1)
}

/// Everything the resolution side computes for one triple.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub seifert: SeifertData,
    pub graph: DualGraph,
    pub fundamental_cycle: Cycle,
    /// `p_a(Z_E)` from the graph.
    pub pf: i64,
    /// Closed form, or `None` when `lambda_3 > alpha`.
    pub pf_formula: Option<i64>,
}

impl Resolution {
    pub fn z_squared(&self) -> i64 {
        self.fundamental_cycle.self_intersection(&self.graph)
    }
}

pub fn resolve(t: &BrieskornTriple) -> Result<Resolution> {
    let seifert = seifert_data(t)?;
    let graph = build_dual_graph(&seifert)?;
    let fundamental_cycle = fundamental_cycle(&graph)?;
    let pf = fundamental_cycle.arithmetic_genus(&graph)?;
    let pf_formula = match fundamental_genus_formula(t) {
        Ok(v) => Some(v),
        Err(Error::FormulaInapplicable { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Resolution {
        seifert,
        graph,
        fundamental_cycle,
        pf,
        pf_formula,
    })
}
