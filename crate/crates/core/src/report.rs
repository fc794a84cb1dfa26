//! Analysis reports and their serializations.
//!
//! JSON reports follow schema `parhom/1`: one object whose keys appear in the
//! order of the fields of [`AnalysisReport`]. Markings are sorted integer
//! arrays; absent integers are `null`.
//!
//! TSV rows carry the fixed columns of [`TSV_HEADER`]; empty markings and
//! absent values are written as `-`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::{
    boundary_codim_class, brute_force_reduction, chain_analysis, exception_flags,
    is_cycle_connected, reduction, BoundaryClass, ExceptionFlags, LargerAutomorphism,
    ReductionResult,
};
use crate::dynkin::{DynkinDiagram, Marking};
use crate::error::{Error, Result};
use crate::geometry::{cycle_descriptor, dim_flag, dual_cycle_dim, CycleDescriptor, ParabolicPair};
use crate::roots::RootSystem;
use crate::weyl::WeylLimit;

pub const SCHEMA: &str = "parhom/1";

pub const TSV_HEADER: &str =
    "type\tpsi_p\tpsi_q\tdim_GP\tcycle_dim\treduced\tconnected\tminimal_n\texception";

pub const LINEARITY_WARNING: &str = "linearity of cycles not computed";

/// Largest diagram rank `enumerate` accepts (4^rank marking pairs).
pub const MAX_ENUMERATE_RANK: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalNode {
    /// 1-based factor position in the diagram string.
    pub factor: usize,
    pub factor_type: String,
    /// Bourbaki index within the factor.
    pub node: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(rename = "type")]
    pub type_string: String,
    pub psi_p: Marking,
    pub psi_q: Marking,
    pub psi_p_local: Vec<LocalNode>,
    pub psi_q_local: Vec<LocalNode>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDims {
    pub g_p: usize,
    pub g_q: usize,
    pub g_pq: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub k_cycle: usize,
    pub l_dual: usize,
    /// Dimension added per tower level; level `j` has dimension
    /// `j * dim_per_level`.
    pub dim_per_level: usize,
    pub formula: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    /// Whether the Weyl-group chain search ran.
    pub computed: bool,
    pub connected: bool,
    pub quotient_marking: Marking,
    pub minimal_n: Option<usize>,
    pub reachable_sizes: Vec<usize>,
    pub reachable_dims: Vec<usize>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub input: InputEcho,
    pub dims: SpaceDims,
    pub cycle: CycleDescriptor,
    pub dual_cycle_dim: usize,
    pub tower: TowerReport,
    pub reduction: ReductionResult,
    /// Reduction of `P` mod `Q`.
    pub p_reduction: Marking,
    pub connectivity: ConnectivityReport,
    pub flags: ExceptionFlags,
    pub boundary_class: BoundaryClass,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub chain_length: bool,
    pub max_k: usize,
    pub weyl_limit: WeylLimit,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            chain_length: false,
            max_k: 32,
            weyl_limit: WeylLimit::DEFAULT,
        }
    }
}

/// Analyses marking pairs on one diagram, sharing the root system between
/// calls.
#[derive(Debug, Clone)]
pub struct Analyzer {
    diagram: DynkinDiagram,
    roots: Option<RootSystem>,
    options: AnalysisOptions,
}

impl Analyzer {
    /// Fails with a guard error up front when chains are requested and the
    /// Weyl group is over the limit.
    pub fn new(diagram: DynkinDiagram, options: AnalysisOptions) -> Result<Self> {
        let roots = if options.chain_length {
            options
                .weyl_limit
                .check(diagram.weyl_order_of(&diagram.all_nodes()))?;
            Some(RootSystem::new(diagram.clone()))
        } else {
            None
        };
        Ok(Analyzer {
            diagram,
            roots,
            options,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn analyze(&self, psi_p: &Marking, psi_q: &Marking) -> Result<AnalysisReport> {
        let d = &self.diagram;
        let pair = ParabolicPair::new(d.clone(), psi_p.clone(), psi_q.clone())?;
        let mut warnings = vec![LINEARITY_WARNING.to_string()];

        let dims = SpaceDims {
            g_p: dim_flag(d, psi_p),
            g_q: dim_flag(d, psi_q),
            g_pq: dim_flag(d, &pair.intersection_marking()),
        };
        let cycle = cycle_descriptor(&pair);
        let dual = dual_cycle_dim(&pair);
        let red = reduction(&pair);
        let p_red = reduction(&pair.transposed()).reduced_marking;
        let flags = exception_flags(&pair);
        if flags.degenerate_b_match {
            warnings.push(
                "(B_l, alpha_1) with Q at {alpha_l}: table entry {alpha_(i-1), alpha_l} has index 0; not flagged"
                    .to_string(),
            );
        }

        let connected = is_cycle_connected(&pair);
        let connectivity = match &self.roots {
            Some(rs) => {
                let c = chain_analysis(&pair, rs, self.options.max_k, self.options.weyl_limit)?;
                if !c.complete {
                    warnings.push(format!(
                        "chain analysis truncated at max_k = {}",
                        self.options.max_k
                    ));
                }
                ConnectivityReport {
                    computed: true,
                    connected: if c.complete { c.connected } else { connected },
                    quotient_marking: c.quotient_marking,
                    minimal_n: c.minimal_n,
                    reachable_sizes: c.reachable_sizes,
                    reachable_dims: c.reachable_dims,
                    complete: c.complete,
                }
            }
            None => ConnectivityReport {
                computed: false,
                connected,
                quotient_marking: psi_p.intersection(psi_q),
                minimal_n: None,
                reachable_sizes: Vec::new(),
                reachable_dims: Vec::new(),
                complete: false,
            },
        };

        let report = AnalysisReport {
            schema: SCHEMA.to_string(),
            input: InputEcho {
                type_string: d.to_string(),
                psi_p: psi_p.clone(),
                psi_q: psi_q.clone(),
                psi_p_local: local_nodes(d, psi_p),
                psi_q_local: local_nodes(d, psi_q),
            },
            dims,
            tower: TowerReport {
                k_cycle: cycle.dim,
                l_dual: dual,
                dim_per_level: cycle.dim + dual,
                formula: "derived: dim T^j = j*(k+l)".to_string(),
            },
            cycle,
            dual_cycle_dim: dual,
            reduction: red,
            p_reduction: p_red,
            connectivity,
            flags,
            boundary_class: boundary_codim_class(d, psi_p),
            warnings,
        };
        verify_report(&pair, &report)?;
        Ok(report)
    }
}

fn local_nodes(d: &DynkinDiagram, marking: &Marking) -> Vec<LocalNode> {
    marking
        .iter()
        .map(|n| {
            let (f, node) = d.local_index(n);
            LocalNode {
                factor: f + 1,
                factor_type: d.factors()[f].to_string(),
                node,
            }
        })
        .collect()
}

/// Cross-field checks run before a report is emitted.
pub fn verify_report(pair: &ParabolicPair, r: &AnalysisReport) -> Result<()> {
    let fail = |what: &str| Err(Error::Consistency(format!("{what} for {}", describe(pair))));
    let dims = r.dims;
    if r.cycle.dim != dims.g_pq - dims.g_q {
        return fail("cycle dim differs from dim G/(P∩Q) - dim G/Q");
    }
    if r.cycle.intrinsic_dim() != r.cycle.dim {
        return fail("cycle dim differs from its own type's dimension");
    }
    if r.dual_cycle_dim != dims.g_pq - dims.g_p {
        return fail("dual cycle dim differs from dim G/(P∩Q) - dim G/P");
    }
    if (r.cycle.dim == 0) != r.cycle.is_point {
        return fail("point flag disagrees with cycle dim");
    }
    let reduced_pair = pair.with_q(r.reduction.reduced_marking.clone());
    if cycle_descriptor(&reduced_pair).dim != r.cycle.dim {
        return fail("cycle dim changes under reduction of Q");
    }
    if reduction(&reduced_pair).reduced_marking != r.reduction.reduced_marking {
        return fail("reduction is not idempotent");
    }
    if pair.psi_q().len() <= 20 && brute_force_reduction(pair)? != r.reduction.reduced_marking {
        return fail("reduction differs from exhaustive search");
    }
    let c = &r.connectivity;
    if c.computed && c.complete {
        if c.connected != is_cycle_connected(pair) {
            return fail("chain search disagrees with the connectivity criterion");
        }
        if let Some(&last) = c.reachable_dims.last() {
            if (last == dims.g_p) != c.connected {
                return fail("reachable dimension disagrees with saturation");
            }
        }
    }
    Ok(())
}

fn describe(pair: &ParabolicPair) -> String {
    format!("{} p={} q={}", pair.diagram(), pair.psi_p(), pair.psi_q())
}

pub fn render_json(r: &AnalysisReport) -> String {
    serde_json::to_string(r).expect("reports always serialize")
}

pub fn parse_json(text: &str) -> serde_json::Result<AnalysisReport> {
    serde_json::from_str(text)
}

fn exception_tags(flags: &ExceptionFlags) -> String {
    let mut tags = Vec::new();
    if flags.mok_zhang_exception {
        tags.push("mok_zhang".to_string());
    }
    if flags.larger_automorphism_case != LargerAutomorphism::None {
        tags.push(format!("{:?}", flags.larger_automorphism_case));
    }
    if flags.degenerate_b_match {
        tags.push("degenerate_b".to_string());
    }
    if tags.is_empty() {
        "-".to_string()
    } else {
        tags.join("+")
    }
}

pub fn render_tsv_row(r: &AnalysisReport) -> String {
    let minimal_n = r
        .connectivity
        .minimal_n
        .map_or_else(|| "-".to_string(), |n| n.to_string());
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.input.type_string,
        r.input.psi_p,
        r.input.psi_q,
        r.dims.g_p,
        r.cycle.dim,
        r.reduction.reduced_marking,
        r.connectivity.connected,
        minimal_n,
        exception_tags(&r.flags),
    )
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Human-readable rendering.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let i = &r.input;
    let _ = writeln!(s, "type {}   P at {{{}}}   Q at {{{}}}", i.type_string, i.psi_p, i.psi_q);
    let _ = writeln!(
        s,
        "dim G/P = {}   dim G/Q = {}   dim G/(P∩Q) = {}",
        r.dims.g_p, r.dims.g_q, r.dims.g_pq
    );
    let c = &r.cycle;
    let kind = if c.is_point {
        "point".to_string()
    } else {
        format!("{} marked at {{{}}}", c.type_string, c.marking)
    };
    let _ = writeln!(
        s,
        "Q-cycle: {kind}, dim {}{}",
        c.dim,
        if c.is_whole_space { " (whole space)" } else { "" }
    );
    let _ = writeln!(s, "P-cycle dim: {}", r.dual_cycle_dim);
    let _ = writeln!(
        s,
        "tower: k = {}, l = {}, dim T^j = j*{} ({})",
        r.tower.k_cycle, r.tower.l_dual, r.tower.dim_per_level, r.tower.formula
    );
    let _ = writeln!(
        s,
        "reduction of Q mod P: {{{}}}{}",
        r.reduction.reduced_marking,
        if r.reduction.is_already_reduced { " (already reduced)" } else { "" }
    );
    let _ = writeln!(s, "reduction of P mod Q: {{{}}}", r.p_reduction);
    let k = &r.connectivity;
    let _ = writeln!(
        s,
        "cycle-connected: {}   quotient marking {{{}}}",
        k.connected, k.quotient_marking
    );
    if k.computed {
        let n = k.minimal_n.map_or("none".to_string(), |n| n.to_string());
        let _ = writeln!(
            s,
            "minimal chain length N = {n}   |S_j| = {}   dims = {}{}",
            list(&k.reachable_sizes),
            list(&k.reachable_dims),
            if k.complete { "" } else { " (incomplete)" }
        );
    }
    let _ = writeln!(s, "exceptions: {}", exception_tags(&r.flags));
    let _ = writeln!(s, "boundary: {:?}", r.boundary_class);
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerateOptions {
    pub nontrivial_only: bool,
    pub analysis: AnalysisOptions,
}

/// All `(psi_p, psi_q)` with `psi_p` nonempty, lexicographic in the sorted
/// node lists. With `nontrivial_only`, pairs with `Q ⊆ P` or `Q = G` are
/// dropped.
pub fn enumerate_pairs(d: &DynkinDiagram, nontrivial_only: bool) -> Result<Vec<(Marking, Marking)>> {
    if d.rank() > MAX_ENUMERATE_RANK {
        return Err(Error::GuardLimit {
            estimated: 1u128 << (2 * d.rank()).min(127),
            limit: 1u128 << (2 * MAX_ENUMERATE_RANK),
        });
    }
    let subsets = Marking::all_subsets_of(&d.all_nodes().to_vec());
    let mut out = Vec::new();
    for p in subsets.iter().filter(|p| !p.is_empty()) {
        for q in &subsets {
            if nontrivial_only && (p.is_subset(q) || q.is_empty()) {
                continue;
            }
            out.push((p.clone(), q.clone()));
        }
    }
    Ok(out)
}

/// Analyses every enumerated pair. Pairs run in parallel; the output keeps
/// the enumeration order.
pub fn enumerate(d: &DynkinDiagram, options: EnumerateOptions) -> Result<Vec<AnalysisReport>> {
    let pairs = enumerate_pairs(d, options.nontrivial_only)?;
    let analyzer = Analyzer::new(d.clone(), options.analysis)?;
    pairs
        .par_iter()
        .map(|(p, q)| analyzer.analyze(p, q))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn analyze(d: &str, p: &str, q: &str, chains: bool) -> AnalysisReport {
        let opts = AnalysisOptions {
            chain_length: chains,
            ..Default::default()
        };
        Analyzer::new(d.parse().unwrap(), opts)
            .unwrap()
            .analyze(&Marking::parse(p).unwrap(), &Marking::parse(q).unwrap())
            .unwrap()
    }

    #[test]
    fn grassmannian_report() {
        let r = analyze("A3", "2", "1", true);
        assert_eq!(r.cycle.dim, 2);
        assert_eq!(r.reduction.reduced_marking, Marking::from([1]));
        assert!(r.connectivity.connected);
        assert_eq!(r.connectivity.minimal_n, Some(2));
        let json = render_json(&r);
        assert!(json.starts_with(r#"{"schema":"parhom/1","input":{"type":"A3","psi_p":[2],"psi_q":[1]"#));
        assert!(json.contains(r#""connectivity":{"computed":true,"connected":true,"quotient_marking":[],"minimal_n":2,"#));
        assert_eq!(
            render_tsv_row(&r),
            "A3\t2\t1\t4\t2\t1\ttrue\t2\t-"
        );
    }

    #[test]
    fn point_cycle_and_uncomputed_chain() {
        let r = analyze("A3", "2", "2", false);
        let json = render_json(&r);
        assert!(json.contains(r#""dim":0,"is_point":true"#));
        assert!(json.contains(r#""computed":false"#));
        assert!(json.contains(r#""minimal_n":null"#));
        assert_eq!(r.warnings, vec![LINEARITY_WARNING.to_string()]);
    }

    #[test]
    fn json_round_trip() {
        for (d, p, q) in [("A3", "2", "1"), ("B4", "1", "4"), ("A2xG2", "1,4", "3"), ("C3", "3", "2")] {
            for chains in [false, true] {
                let r = analyze(d, p, q, chains);
                let text = render_json(&r);
                let back = parse_json(&text).unwrap();
                assert_eq!(back, r);
                assert_eq!(render_json(&back), text);
            }
        }
    }

    #[test]
    fn product_echo() {
        let r = analyze("A2xG2", "1,4", "3", false);
        assert_eq!(
            r.input.psi_p_local,
            vec![
                LocalNode { factor: 1, factor_type: "A2".into(), node: 1 },
                LocalNode { factor: 2, factor_type: "G2".into(), node: 2 },
            ]
        );
        assert!(r.flags.mok_zhang_exception);
    }

    #[test]
    fn degenerate_b_warning() {
        let r = analyze("B3", "1", "3", false);
        assert!(!r.flags.mok_zhang_exception);
        assert!(r.warnings.iter().any(|w| w.contains("index 0")));
        assert!(render_tsv_row(&r).ends_with("degenerate_b"));
    }

    #[test]
    fn truncation_warning() {
        let opts = AnalysisOptions {
            chain_length: true,
            max_k: 1,
            ..Default::default()
        };
        let r = Analyzer::new("A3".parse().unwrap(), opts)
            .unwrap()
            .analyze(&Marking::from([2]), &Marking::from([1]))
            .unwrap();
        assert!(!r.connectivity.complete);
        assert!(r.connectivity.connected);
        assert!(r.warnings.iter().any(|w| w.contains("truncated at max_k = 1")));
    }

    #[test]
    fn enumeration_counts_and_order() {
        let a2: DynkinDiagram = "A2".parse().unwrap();
        let rows = enumerate(&a2, EnumerateOptions::default()).unwrap();
        assert_eq!(rows.len(), 12);
        assert_eq!(rows[0].input.psi_p, Marking::from([1]));
        assert_eq!(rows[0].input.psi_q, Marking::empty());
        assert_eq!(rows[11].input.psi_p, Marking::from([2]));
        for s in ["A1", "A3", "B3", "A1xA2"] {
            let d: DynkinDiagram = s.parse().unwrap();
            let n = d.rank() as u32;
            assert_eq!(enumerate_pairs(&d, false).unwrap().len(), (2usize.pow(n) - 1) * 2usize.pow(n));
        }
        let b2: DynkinDiagram = "B2".parse().unwrap();
        let pairs = enumerate_pairs(&b2, true).unwrap();
        assert!(pairs.iter().all(|(p, q)| !p.is_subset(q) && !q.is_empty()));
        assert_eq!(pairs.len(), 4);
        assert!(enumerate_pairs(&"A13".parse().unwrap(), false).is_err());
    }

    #[test]
    fn guard_breach_is_exit_3() {
        let opts = AnalysisOptions {
            chain_length: true,
            ..Default::default()
        };
        let err = Analyzer::new("E7".parse().unwrap(), opts).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
