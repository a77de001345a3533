//! Subcommand bodies. Each returns data; printing lives in `main`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use anyhow::Result;
use rayon::prelude::*;
use serde::Serialize;
use threshold_dim::atlas::{canonical_code, connected_graphs};
use threshold_dim::distance::distances;
use threshold_dim::irreducible::is_irreducible;
use threshold_dim::resolve::{first_unresolved_pair, metric_dimension_with, signature};
use threshold_dim::shortlex::{assign, Assignment, AssignmentProblem, SubsetOrder};
use threshold_dim::threshold::{tau_bounds, tau_exact};
use threshold_dim::{EdgeSet, Graph, Limits};

use crate::report::{Report, VerdictTag};

/// Cap flags shared by the analysis subcommands.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::Args)]
pub struct Caps {
    /// Largest order for the exact metric dimension solver.
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Largest number of non-edges for exhaustive supergraph search.
    #[arg(long)]
    pub max_complement_edges: Option<usize>,
    /// Lift the caps (explicit cap flags still apply).
    #[arg(long)]
    pub force: bool,
}

impl Caps {
    pub fn limits(&self) -> Limits {
        let mut l = if self.force { Limits::unbounded() } else { Limits::default() };
        if let Some(n) = self.max_order {
            l.max_beta_order = n;
        }
        if let Some(m) = self.max_complement_edges {
            l.max_complement_edges = m;
        }
        l
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

pub fn mdim(g: &Graph, caps: &Caps) -> Result<Report> {
    let start = Instant::now();
    let mut r = Report::new(g);
    r.beta = Some(metric_dimension_with(g, &caps.limits())?);
    r.wall_time_ms = elapsed_ms(start);
    Ok(r)
}

/// Bounds on `τ`, or the exact value with `exact`.
pub fn tdim(g: &Graph, caps: &Caps, exact: bool) -> Result<Report> {
    let start = Instant::now();
    let limits = caps.limits();
    let b = if exact { tau_exact(g, &limits)? } else { tau_bounds(g, &limits) };
    let mut r = Report::new(g).with_bounds(&b);
    r.wall_time_ms = elapsed_ms(start);
    Ok(r)
}

/// `β` when within the cap, plus the `τ` bounds; never fails on caps.
pub fn bounds(g: &Graph, caps: &Caps) -> Report {
    let start = Instant::now();
    let limits = caps.limits();
    let mut r = Report::new(g).with_bounds(&tau_bounds(g, &limits));
    r.beta = metric_dimension_with(g, &limits).ok();
    r.wall_time_ms = elapsed_ms(start);
    r
}

pub fn check_irreducible(g: &Graph, caps: &Caps) -> Result<Report> {
    let start = Instant::now();
    let mut r = Report::new(g).with_verdict(&is_irreducible(g, &caps.limits())?);
    r.wall_time_ms = elapsed_ms(start);
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolvingCheck {
    pub schema: u32,
    pub landmarks: Vec<usize>,
    pub resolves: bool,
    /// Smallest pair with equal signatures, and that signature (`null` = unreachable).
    pub pair: Option<(usize, usize)>,
    pub signature: Option<Vec<Option<u32>>>,
}

impl ResolvingCheck {
    pub fn to_text(&self) -> String {
        match (self.pair, &self.signature) {
            (Some((u, v)), Some(sig)) => {
                let coords: Vec<String> =
                    sig.iter().map(|d| d.map_or_else(|| "inf".to_string(), |d| d.to_string())).collect();
                format!("fail: vertices {u} and {v} share the signature ({})\n", coords.join(", "))
            }
            _ => "ok\n".to_string(),
        }
    }
}

pub fn verify_resolving(g: &Graph, landmarks: &[usize]) -> Result<ResolvingCheck> {
    for &v in landmarks {
        g.check_vertex(v)?;
    }
    let pair = first_unresolved_pair(g, landmarks);
    let signature = pair.map(|(u, _)| {
        let s = signature(&distances(g), u, landmarks);
        s.0.into_iter().map(|d| (d != threshold_dim::UNREACHABLE).then_some(d)).collect()
    });
    Ok(ResolvingCheck {
        schema: crate::report::SCHEMA,
        landmarks: landmarks.to_vec(),
        resolves: pair.is_none(),
        pair,
        signature,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssignmentReport {
    pub schema: u32,
    pub order: &'static str,
    pub added: EdgeSet,
    pub assigned: Vec<(usize, Vec<usize>)>,
}

/// Runs the assignment and returns the augmented graph with what was added.
pub fn shortlex_assign(g: &Graph, w: Vec<usize>, p: Vec<usize>, reverse: bool) -> Result<(Graph, AssignmentReport)> {
    let prob = AssignmentProblem::new(g, w, p)?;
    let order = if reverse { SubsetOrder::ReverseShortlex } else { SubsetOrder::Shortlex };
    let Assignment { edges, assigned } = assign(&prob, order);
    let h = g.add_edges(&edges)?;
    let name = if reverse { "reverse_shortlex" } else { "shortlex" };
    Ok((h, AssignmentReport { schema: crate::report::SCHEMA, order: name, added: edges, assigned }))
}

/// One report per connected graph of order `1..=max_order`, ordered by
/// (order, edge count, canonical code).
pub fn atlas(max_order: usize) -> Result<Vec<(Graph, Report)>> {
    let graphs: Vec<Graph> = connected_graphs(max_order)?.into_iter().flatten().collect();
    let limits = Limits::default();
    let mut out: Vec<((usize, usize, u64), Graph, Report)> = graphs
        .into_par_iter()
        .map(|g| -> Result<_> {
            let start = Instant::now();
            let beta = metric_dimension_with(&g, &limits)?;
            let exact = tau_exact(&g, &limits)?;
            let tau = exact.exact.expect("tau_exact fills the exact value");
            let mut r = Report::new(&g).with_bounds(&exact);
            r.verdict = Some(if tau == beta.beta { VerdictTag::Irreducible } else { VerdictTag::Reducible });
            if tau == beta.beta {
                r.verdict_certificate = Some(exact.certificate.clone());
            }
            r.beta = Some(beta);
            r.wall_time_ms = elapsed_ms(start);
            Ok(((g.order(), g.edge_count(), canonical_code(&g)), g, r))
        })
        .collect::<Result<_>>()?;
    out.sort_by_key(|(key, _, _)| *key);
    Ok(out.into_iter().map(|(_, g, r)| (g, r)).collect())
}

/// Counts of `(n, β, τ, irreducible)` over atlas reports, as a fixed-width table.
pub fn atlas_summary(reports: &[Report]) -> String {
    let mut counts: BTreeMap<(usize, usize, usize, bool), usize> = BTreeMap::new();
    for r in reports {
        let beta = r.beta.as_ref().map_or(0, |b| b.beta);
        let tau = r.tau_exact.unwrap_or(0);
        *counts.entry((r.graph.order, beta, tau, beta == tau)).or_default() += 1;
    }
    let mut out = format!("{:>3} {:>5} {:>5} {:>12} {:>7}\n", "n", "beta", "tau", "irreducible", "count");
    for ((n, beta, tau, irr), c) in counts {
        let _ = writeln!(out, "{n:>3} {beta:>5} {tau:>5} {:>12} {c:>7}", if irr { "yes" } else { "no" });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use threshold_dim::families::{complete, path};

    #[test]
    fn verify_messages() {
        let k3 = complete(3).unwrap();
        let c = verify_resolving(&k3, &[0]).unwrap();
        assert_eq!(c.pair, Some((1, 2)));
        assert_eq!(c.to_text(), "fail: vertices 1 and 2 share the signature (1)\n");
        assert_eq!(verify_resolving(&path(4).unwrap(), &[0]).unwrap().to_text(), "ok\n");
        assert!(verify_resolving(&k3, &[5]).is_err());
    }

    #[test]
    fn caps_follow_flags() {
        assert_eq!(Caps::default().limits(), Limits::default());
        let c = Caps { max_order: Some(30), max_complement_edges: None, force: false };
        assert_eq!(c.limits().max_beta_order, 30);
        let f = Caps { force: true, ..Caps::default() };
        assert_eq!(f.limits(), Limits::unbounded());
    }

    #[test]
    fn atlas_four() {
        let rows = atlas(4).unwrap();
        let fours: Vec<_> = rows.iter().filter(|(g, _)| g.order() == 4).collect();
        assert_eq!(fours.len(), 6);
        assert!(fours.iter().all(|(_, r)| r.verdict == Some(VerdictTag::Irreducible)));
    }
}
