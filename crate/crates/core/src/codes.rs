//! Concrete small-to-big codes over GF(q).
//!
//! The building block is a `(k_hat + 2, k_hat)` MSR code with two
//! subsymbols per node. It supports two repair degrees: `n_hat - 1` helpers
//! sending one subsymbol each, and `k_hat` helpers sending everything they
//! store (a whole-file download). It is obtained from the product-matrix
//! `(5, 3, 4)` MSR code by shortening away `3 - k_hat` nodes, so `k_hat`
//! ranges over `1..=3`.
//!
//! A [`HeterogeneousCode`] places the small code on `n_hat` of `n` nodes and
//! leaves the rest empty; a [`GluedCode`] stacks one copy per permutation of
//! the node labels, each copy carrying its own file.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmath::{int, Rational};
use crate::gf::{Matrix, PrimeField};
use crate::tradeoff::SmallCode;

pub const DEFAULT_FIELD_ORDER: u32 = 11;
pub const DEFAULT_MAX_GLUE_NODES: usize = 7;

/// Subsymbols stored per small-code node.
const SUBSYMBOLS_PER_NODE: usize = 2;

/// Nodes, reconstruction degree and repair degree of the product-matrix
/// code everything is shortened from.
const BASE_N: usize = 5;
const BASE_K: usize = 3;
const BASE_D: usize = 4;

/// One way to rebuild a failed node: helper `helpers[i]` sends
/// `transmit[i] * stored`, and the newcomer applies `combine` to the
/// concatenated downloads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairScheme {
    pub helpers: Vec<usize>,
    pub transmit: Vec<Matrix>,
    pub combine: Matrix,
}

impl RepairScheme {
    /// Total subsymbols downloaded.
    pub fn bandwidth(&self) -> usize {
        self.transmit.iter().map(Matrix::rows).sum()
    }
}

#[derive(Debug, Clone)]
pub struct MsrSmallCode {
    field: PrimeField,
    n_hat: usize,
    k_hat: usize,
    generators: Vec<Matrix>,
    schemes: BTreeMap<(usize, Vec<usize>), RepairScheme>,
}

impl MsrSmallCode {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n_hat(&self) -> usize {
        self.n_hat
    }

    pub fn k_hat(&self) -> usize {
        self.k_hat
    }

    pub fn subsymbols_per_node(&self) -> usize {
        SUBSYMBOLS_PER_NODE
    }

    /// File size in subsymbols, `k_hat * alpha_hat`.
    pub fn file_subsymbols(&self) -> usize {
        self.k_hat * SUBSYMBOLS_PER_NODE
    }

    pub fn generator(&self, node: usize) -> &Matrix {
        &self.generators[node]
    }

    /// Repair degrees with a scheme: whole-file at `k_hat`, optimal at `n_hat - 1`.
    pub fn supported_degrees(&self) -> Vec<usize> {
        vec![self.k_hat, self.n_hat - 1]
    }

    pub fn schemes(&self) -> impl Iterator<Item = (&(usize, Vec<usize>), &RepairScheme)> {
        self.schemes.iter()
    }

    /// The small code's analytic description in subsymbol units.
    pub fn analytic(&self) -> SmallCode {
        SmallCode {
            n_hat: self.n_hat,
            k_hat: self.k_hat,
            alpha_hat: int(SUBSYMBOLS_PER_NODE as i64),
        }
    }

    /// Stored subsymbols of every small-code node for the given file.
    pub fn encode(&self, file: &[u32]) -> Result<Vec<Vec<u32>>> {
        let x = Matrix::column(self.field, file);
        self.generators
            .iter()
            .map(|g| Ok(g.mul(&x)?.entries().to_vec()))
            .collect()
    }

    /// Picks the scheme for a failed node given the small-code nodes that are
    /// available as helpers (sorted). Uses the highest supported degree.
    pub fn scheme_for(&self, failed: usize, available: &[usize]) -> Option<&RepairScheme> {
        if available.len() == self.n_hat - 1 {
            return self.schemes.get(&(failed, available.to_vec()));
        }
        if available.len() >= self.k_hat {
            let first: Vec<usize> = available[..self.k_hat].to_vec();
            return self.schemes.get(&(failed, first));
        }
        None
    }

    fn validate(&self) -> Result<()> {
        let m = self.file_subsymbols();
        for (i, g) in self.generators.iter().enumerate() {
            if g.rank() != SUBSYMBOLS_PER_NODE {
                return Err(Error::Construction(format!(
                    "node {i} stores dependent subsymbols"
                )));
            }
        }
        for subset in (0..self.n_hat).combinations(self.k_hat) {
            let parts: Vec<&Matrix> = subset.iter().map(|&i| &self.generators[i]).collect();
            if Matrix::vstack(self.field, m, &parts)?.rank() != m {
                return Err(Error::Construction(format!(
                    "reconstruction fails from nodes {subset:?} over GF({})",
                    self.field.order()
                )));
            }
        }
        let analytic = self.analytic();
        for ((failed, helpers), scheme) in &self.schemes {
            let downloads = self.transmitted_generators(scheme)?;
            if scheme.combine.mul(&downloads)? != self.generators[*failed] {
                return Err(Error::Construction(format!(
                    "repair of node {failed} from {helpers:?} is not exact"
                )));
            }
            let expected = analytic.bandwidth(helpers.len())?;
            if int(scheme.bandwidth() as i64) != expected {
                return Err(Error::Construction(format!(
                    "repair of node {failed} from {helpers:?} downloads {} subsymbols, optimal is {expected}",
                    scheme.bandwidth()
                )));
            }
        }
        for failed in 0..self.n_hat {
            let others: Vec<usize> = (0..self.n_hat).filter(|&j| j != failed).collect();
            for degree in self.supported_degrees() {
                for h in others.iter().copied().combinations(degree) {
                    if !self.schemes.contains_key(&(failed, h.clone())) {
                        return Err(Error::Construction(format!(
                            "no repair scheme for node {failed} from {h:?}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn transmitted_generators(&self, scheme: &RepairScheme) -> Result<Matrix> {
        let rows = scheme
            .helpers
            .iter()
            .zip(&scheme.transmit)
            .map(|(&j, s)| s.mul(&self.generators[j]))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&Matrix> = rows.iter().collect();
        Matrix::vstack(self.field, self.file_subsymbols(), &refs)
    }
}

/// Solves `combine * downloads = target` for the combining matrix.
fn combining_matrix(downloads: &Matrix, target: &Matrix) -> Result<Option<Matrix>> {
    Ok(downloads
        .transpose()
        .solve(&target.transpose())?
        .map(|x| x.transpose()))
}

/// Builds and exhaustively validates a `(n_hat, k_hat)` MSR code with
/// `n_hat = k_hat + 2`, two subsymbols per node and one subsymbol per helper
/// at degree `n_hat - 1`.
pub fn build_small_msr(n_hat: usize, k_hat: usize, field: PrimeField) -> Result<MsrSmallCode> {
    if n_hat != k_hat + 2 {
        return Err(Error::Construction(format!(
            "only n_hat = k_hat + 2 is supported, got ({n_hat},{k_hat})"
        )));
    }
    if !(1..=BASE_K).contains(&k_hat) {
        return Err(Error::Construction(format!(
            "k_hat = {k_hat}: one-subsymbol-per-helper codes are built for k_hat <= {BASE_K} only"
        )));
    }
    let q = field.order();

    // Evaluation points with pairwise distinct squares: the lambda_i = x_i^2
    // of the product-matrix construction must be distinct.
    let mut points = Vec::new();
    let mut squares = Vec::new();
    for x in 0..q {
        let sq = field.mul(x, x);
        if !squares.contains(&sq) {
            squares.push(sq);
            points.push(x);
        }
        if points.len() == BASE_N {
            break;
        }
    }
    if points.len() < BASE_N {
        return Err(Error::Construction(format!(
            "field too small: GF({q}) has only {} elements with distinct squares, need {BASE_N}",
            points.len()
        )));
    }

    // Message matrix [S1; S2] with S1, S2 symmetric 2x2, six symbols total.
    // Node i stores psi_i^T [S1; S2] with psi_i = (1, x, x^2, x^3).
    let base_len = BASE_K * SUBSYMBOLS_PER_NODE;
    let symbol = |block: usize, a: usize, b: usize| 3 * block + a + b;
    let base_generators: Vec<Matrix> = points
        .iter()
        .map(|&x| {
            let psi: Vec<u32> = (0..BASE_D as u64).map(|e| field.pow(x, e)).collect();
            let mut g = Matrix::zeros(field, SUBSYMBOLS_PER_NODE, base_len);
            for (r, &coeff) in psi.iter().enumerate() {
                for c in 0..SUBSYMBOLS_PER_NODE {
                    let s = symbol(r / 2, r % 2, c);
                    let cur = g.get(c, s).value;
                    g.set(c, s, field.add(cur, coeff));
                }
            }
            g
        })
        .collect();
    // Helper j repairs node f by sending its stored pair dotted with phi_f = (1, x_f).
    let phis: Vec<Matrix> = points
        .iter()
        .map(|&x| Matrix::from_rows(field, SUBSYMBOLS_PER_NODE, &[vec![1, x]]))
        .collect::<Result<_>>()?;

    // Shorten: restrict messages to those that leave the dropped nodes empty.
    let dropped: Vec<&Matrix> = base_generators[n_hat..].iter().collect();
    let generators: Vec<Matrix> = if dropped.is_empty() {
        base_generators[..n_hat].to_vec()
    } else {
        let kernel = Matrix::vstack(field, base_len, &dropped)?.null_space();
        base_generators[..n_hat]
            .iter()
            .map(|g| g.mul(&kernel))
            .collect::<Result<_>>()?
    };
    let file_len = k_hat * SUBSYMBOLS_PER_NODE;
    if generators.iter().any(|g| g.cols() != file_len) {
        return Err(Error::Construction(format!(
            "shortening over GF({q}) left the wrong message dimension"
        )));
    }

    let mut code = MsrSmallCode {
        field,
        n_hat,
        k_hat,
        generators,
        schemes: BTreeMap::new(),
    };

    let identity = Matrix::identity(field, SUBSYMBOLS_PER_NODE);
    for (failed, phi) in phis.iter().enumerate().take(n_hat) {
        let others: Vec<usize> = (0..n_hat).filter(|&j| j != failed).collect();
        let mut candidates = vec![(others.clone(), phi.clone())];
        candidates.extend(
            others
                .iter()
                .copied()
                .combinations(k_hat)
                .map(|h| (h, identity.clone())),
        );
        for (helpers, projection) in candidates {
            let transmit = vec![projection; helpers.len()];
            let partial = RepairScheme {
                helpers: helpers.clone(),
                transmit,
                combine: Matrix::zeros(field, 0, 0),
            };
            let downloads = code.transmitted_generators(&partial)?;
            let combine =
                combining_matrix(&downloads, &code.generators[failed])?.ok_or_else(|| {
                    Error::Construction(format!(
                        "node {failed} is not repairable from {helpers:?} over GF({q})"
                    ))
                })?;
            code.schemes
                .insert((failed, helpers), RepairScheme { combine, ..partial });
        }
    }

    code.validate()?;
    Ok(code)
}

/// The small code on `n_hat` of `n` nodes, the rest storing nothing.
#[derive(Debug, Clone)]
pub struct HeterogeneousCode {
    pub small: Arc<MsrSmallCode>,
    pub n: usize,
    /// `placement[j]` is the big node hosting small-code node `j`.
    pub placement: Vec<usize>,
}

impl HeterogeneousCode {
    /// Small-code index stored at big node `node`, if any.
    pub fn role(&self, node: usize) -> Option<usize> {
        self.placement.iter().position(|&p| p == node)
    }

    pub fn storage_subsymbols(&self, node: usize) -> usize {
        if self.role(node).is_some() {
            self.small.subsymbols_per_node()
        } else {
            0
        }
    }

    /// Reconstruction degree guaranteed by keeping the parity count:
    /// `n - (n_hat - k_hat)`.
    pub fn k(&self) -> usize {
        self.n - (self.small.n_hat() - self.small.k_hat())
    }
}

pub fn extend_with_empty_nodes(
    small: Arc<MsrSmallCode>,
    n: usize,
    placement: Vec<usize>,
) -> Result<HeterogeneousCode> {
    if placement.len() != small.n_hat() {
        return Err(Error::InvalidParams(format!(
            "placement has {} positions, small code has {} nodes",
            placement.len(),
            small.n_hat()
        )));
    }
    if placement.iter().any(|&p| p >= n) || placement.iter().duplicates().next().is_some() {
        return Err(Error::InvalidParams(format!(
            "placement {placement:?} must be distinct positions below {n}"
        )));
    }
    Ok(HeterogeneousCode {
        small,
        n,
        placement,
    })
}

/// One permuted copy inside a [`GluedCode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedCopy {
    pub permutation: Vec<usize>,
    pub placement: Vec<usize>,
    pub file: Vec<u32>,
    /// Indexed by big node; empty for nodes outside the small code.
    pub stored: Vec<Vec<u32>>,
}

impl GluedCopy {
    pub fn role(&self, node: usize) -> Option<usize> {
        self.placement.iter().position(|&p| p == node)
    }

    /// Small-code indices hosted by `nodes`, sorted.
    fn roles_of(&self, nodes: &[usize]) -> Vec<usize> {
        let mut r: Vec<usize> = nodes.iter().filter_map(|&v| self.role(v)).collect();
        r.sort_unstable();
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GlueOptions {
    pub seed: u64,
    pub max_nodes: usize,
}

impl Default for GlueOptions {
    fn default() -> Self {
        GlueOptions {
            seed: 0,
            max_nodes: DEFAULT_MAX_GLUE_NODES,
        }
    }
}

/// Homogeneous code: one copy of the heterogeneous code per permutation of
/// the `n` node labels.
#[derive(Debug, Clone)]
pub struct GluedCode {
    pub small: Arc<MsrSmallCode>,
    pub n: usize,
    pub seed: u64,
    pub copies: Vec<GluedCopy>,
}

/// Per-copy result of repairing one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairOutcome {
    pub replacement: Vec<Vec<u32>>,
    pub per_copy_subsymbols: Vec<usize>,
    pub total_subsymbols: usize,
}

pub fn glue_all_permutations(het: &HeterogeneousCode, opts: &GlueOptions) -> Result<GluedCode> {
    if het.n > opts.max_nodes {
        return Err(Error::CapExceeded {
            what: "node count for n! gluing",
            value: het.n,
            cap: opts.max_nodes,
        });
    }
    let small = &het.small;
    let q = small.field().order();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let copies = (0..het.n)
        .permutations(het.n)
        .map(|perm| {
            let placement: Vec<usize> = het.placement.iter().map(|&p| perm[p]).collect();
            let file: Vec<u32> = (0..small.file_subsymbols())
                .map(|_| rng.random_range(0..q))
                .collect();
            let encoded = small.encode(&file)?;
            let mut stored = vec![Vec::new(); het.n];
            for (j, &node) in placement.iter().enumerate() {
                stored[node] = encoded[j].clone();
            }
            Ok(GluedCopy {
                permutation: perm,
                placement,
                file,
                stored,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GluedCode {
        small: Arc::clone(small),
        n: het.n,
        seed: opts.seed,
        copies,
    })
}

impl GluedCode {
    /// Reconstruction degree, `n - (n_hat - k_hat)`.
    pub fn k(&self) -> usize {
        self.n - (self.small.n_hat() - self.small.k_hat())
    }

    pub fn file_subsymbols(&self) -> usize {
        self.copies.len() * self.small.file_subsymbols()
    }

    /// Everything node `node` stores, concatenated across copies.
    pub fn node_contents(&self, node: usize) -> Vec<u32> {
        self.copies
            .iter()
            .flat_map(|c| c.stored[node].iter().copied())
            .collect()
    }

    pub fn node_subsymbols(&self, node: usize) -> usize {
        self.copies.iter().map(|c| c.stored[node].len()).sum()
    }

    /// Perturbs one stored subsymbol. Only meant for negative-control tests.
    pub fn tamper(&mut self, node: usize, copy: usize) -> Result<()> {
        let q = self.small.field().order();
        let slot = self
            .copies
            .get_mut(copy)
            .and_then(|c| c.stored.get_mut(node))
            .and_then(|s| s.first_mut())
            .ok_or_else(|| {
                Error::InvalidParams(format!("node {node} stores nothing in copy {copy}"))
            })?;
        *slot = (*slot + 1) % q;
        Ok(())
    }

    fn check_nodes(&self, nodes: &[usize]) -> Result<()> {
        if nodes.iter().any(|&v| v >= self.n) || nodes.iter().duplicates().next().is_some() {
            return Err(Error::InvalidParams(format!(
                "nodes {nodes:?} must be distinct and below {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Decodes every copy's file from the contents of `positions`.
    pub fn reconstruct(&self, positions: &[usize]) -> Result<Vec<Vec<u32>>> {
        self.check_nodes(positions)?;
        let small = &self.small;
        let field = small.field();
        let m = small.file_subsymbols();
        self.copies
            .iter()
            .map(|copy| {
                let roles = copy.roles_of(positions);
                if roles.len() < small.k_hat() {
                    return Err(Error::InvalidParams(format!(
                        "nodes {positions:?} hold only {} small-code nodes in some copy",
                        roles.len()
                    )));
                }
                let chosen = &roles[..small.k_hat()];
                let gens: Vec<&Matrix> = chosen.iter().map(|&j| small.generator(j)).collect();
                let data: Vec<u32> = chosen
                    .iter()
                    .flat_map(|&j| copy.stored[copy.placement[j]].iter().copied())
                    .collect();
                let a = Matrix::vstack(field, m, &gens)?;
                let x = a.solve(&Matrix::column(field, &data))?.ok_or_else(|| {
                    Error::ReconstructMismatch {
                        positions: positions.to_vec(),
                        copy: 0,
                    }
                })?;
                Ok(x.entries().to_vec())
            })
            .collect()
    }

    /// Reconstructs and compares against the files that were encoded.
    pub fn verify_reconstruction(&self, positions: &[usize]) -> Result<()> {
        let files = self.reconstruct(positions)?;
        match files
            .iter()
            .zip(&self.copies)
            .position(|(f, c)| *f != c.file)
        {
            Some(copy) => Err(Error::ReconstructMismatch {
                positions: positions.to_vec(),
                copy,
            }),
            None => Ok(()),
        }
    }

    /// Rebuilds `failed` from `helpers`, copy by copy, checking the result
    /// against what the node stored.
    ///
    /// In each copy: an empty failed node costs nothing; if every other
    /// small-code node is among the helpers the one-subsymbol-per-helper
    /// scheme is used; otherwise the first `k_hat` small-code helpers send
    /// everything they hold.
    pub fn repair(&self, failed: usize, helpers: &[usize]) -> Result<RepairOutcome> {
        self.check_nodes(helpers)?;
        if failed >= self.n || helpers.contains(&failed) {
            return Err(Error::InvalidParams(format!(
                "failed node {failed} must be a valid node outside the helper set {helpers:?}"
            )));
        }
        let small = &self.small;
        let field = small.field();
        let mut replacement = Vec::with_capacity(self.copies.len());
        let mut per_copy = Vec::with_capacity(self.copies.len());
        for (ci, copy) in self.copies.iter().enumerate() {
            let Some(role) = copy.role(failed) else {
                replacement.push(Vec::new());
                per_copy.push(0);
                continue;
            };
            let available = copy.roles_of(helpers);
            let scheme = small.scheme_for(role, &available).ok_or_else(|| {
                Error::InvalidParams(format!(
                    "helpers {helpers:?} hold only {} small-code nodes in copy {ci}",
                    available.len()
                ))
            })?;
            let mut downloaded = Vec::with_capacity(scheme.bandwidth());
            for (&j, s) in scheme.helpers.iter().zip(&scheme.transmit) {
                let stored = Matrix::column(field, &copy.stored[copy.placement[j]]);
                downloaded.extend_from_slice(s.mul(&stored)?.entries());
            }
            let rebuilt = scheme
                .combine
                .mul(&Matrix::column(field, &downloaded))?
                .entries()
                .to_vec();
            if rebuilt != copy.stored[failed] {
                return Err(Error::RepairMismatch {
                    failed,
                    helpers: helpers.to_vec(),
                    copy: ci,
                });
            }
            per_copy.push(downloaded.len());
            replacement.push(rebuilt);
        }
        let total = per_copy.iter().sum();
        Ok(RepairOutcome {
            replacement,
            per_copy_subsymbols: per_copy,
            total_subsymbols: total,
        })
    }

    /// Storage per node over total file size; identical for every node.
    pub fn normalized_storage(&self, node: usize) -> Rational {
        Rational::new(
            (self.node_subsymbols(node) as i64).into(),
            (self.file_subsymbols() as i64).into(),
        )
    }

    /// Deterministic text dump: field, small-code generators and repair
    /// schemes, then every copy's layout, file and stored contents.
    pub fn to_text(&self) -> String {
        let small = &self.small;
        let mut out = String::new();
        let row_str = |r: &[u32]| r.iter().map(u32::to_string).join(" ");
        let _ = writeln!(out, "regen-glued-code v1");
        let _ = writeln!(out, "field {}", small.field().order());
        let _ = writeln!(
            out,
            "n {} n_hat {} k_hat {} node_subsymbols {} file_subsymbols {}",
            self.n,
            small.n_hat(),
            small.k_hat(),
            small.subsymbols_per_node(),
            small.file_subsymbols()
        );
        let _ = writeln!(out, "seed {}", self.seed);
        for j in 0..small.n_hat() {
            let g = small.generator(j);
            let _ = writeln!(out, "generator {j}");
            for r in 0..g.rows() {
                let _ = writeln!(out, "  {}", row_str(g.row(r)));
            }
        }
        for ((failed, helpers), scheme) in small.schemes() {
            let _ = writeln!(
                out,
                "repair {failed} from {}",
                row_str(&helpers.iter().map(|&h| h as u32).collect::<Vec<_>>())
            );
            for (h, s) in scheme.helpers.iter().zip(&scheme.transmit) {
                for r in 0..s.rows() {
                    let _ = writeln!(out, "  send {h}: {}", row_str(s.row(r)));
                }
            }
            for r in 0..scheme.combine.rows() {
                let _ = writeln!(out, "  combine: {}", row_str(scheme.combine.row(r)));
            }
        }
        let _ = writeln!(out, "copies {}", self.copies.len());
        for (ci, c) in self.copies.iter().enumerate() {
            let perm: Vec<u32> = c.permutation.iter().map(|&p| p as u32).collect();
            let place: Vec<u32> = c.placement.iter().map(|&p| p as u32).collect();
            let _ = writeln!(
                out,
                "copy {ci} permutation {} placement {}",
                row_str(&perm),
                row_str(&place)
            );
            let _ = writeln!(out, "  file {}", row_str(&c.file));
            for (node, s) in c.stored.iter().enumerate() {
                if s.is_empty() {
                    let _ = writeln!(out, "  node {node} -");
                } else {
                    let _ = writeln!(out, "  node {node} {}", row_str(s));
                }
            }
        }
        out
    }
}

/// Builds the glued code for a `(n, k)` system with `n - k = 2` using the
/// small code with the given `k_hat`; the small code sits on the first
/// `n_hat` nodes before permuting.
pub fn build_glued(
    n: usize,
    k_hat: usize,
    field: PrimeField,
    opts: &GlueOptions,
) -> Result<GluedCode> {
    if n < k_hat + 2 {
        return Err(Error::InvalidParams(format!(
            "need n >= k_hat + 2, got n = {n}, k_hat = {k_hat}"
        )));
    }
    if n > opts.max_nodes {
        return Err(Error::CapExceeded {
            what: "node count for n! gluing",
            value: n,
            cap: opts.max_nodes,
        });
    }
    let small = Arc::new(build_small_msr(k_hat + 2, k_hat, field)?);
    let het = extend_with_empty_nodes(small, n, (0..k_hat + 2).collect())?;
    glue_all_permutations(&het, opts)
}
