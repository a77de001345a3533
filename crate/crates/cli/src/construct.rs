//! Named constructions for `tdim construct`.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use threshold_dim::families::{
    complete, complete_multipartite, cycle, cycle_square, edgeless, generalized_petersen, path, star, subdivided_star,
    PartitionSizes,
};
use threshold_dim::irreducible::{embed_in_irreducible, irreducible_of, s_graph, s_graph_bs};
use threshold_dim::threshold::{g_of, multipartite_threshold_graph, sharpness_family};
use threshold_dim::Graph;

use crate::{load_graph, parse_list};

/// Family names accepted by [`build`], with their parameters.
pub const FAMILIES: &[(&str, &str)] = &[
    ("path", "n"),
    ("cycle", "n"),
    ("complete", "n"),
    ("empty", "n"),
    ("star", "n"),
    ("subdivstar", "t"),
    ("petersen", "n k"),
    ("multipartite", "x1,..,xk"),
    ("cyclesq", "n"),
    ("sgraph", "n"),
    ("sgraphbs", "b s"),
    ("irreducible", "n b"),
    ("embed", "FILE"),
    ("sharpness", "k d"),
    ("mpthreshold", "x1,..,xk"),
];

/// A constructed graph and, when the construction fixes one, its landmark set.
#[derive(Debug, Clone)]
pub struct Built {
    pub graph: Graph,
    pub landmarks: Option<Vec<usize>>,
}

fn plain(graph: Graph) -> Built {
    Built { graph, landmarks: None }
}

fn int(params: &[String], i: usize, name: &str) -> Result<usize> {
    let s = params.get(i).with_context(|| format!("missing parameter {name}"))?;
    s.parse().with_context(|| format!("parameter {name} must be a non-negative integer, got {s:?}"))
}

fn sizes(params: &[String]) -> Result<PartitionSizes> {
    let s = params.first().context("missing part sizes x1,..,xk")?;
    Ok(PartitionSizes::new(parse_list(s)?)?)
}

pub fn build(family: &str, params: &[String]) -> Result<Built> {
    let arity = FAMILIES
        .iter()
        .find(|(name, _)| *name == family)
        .map(|(_, p)| p.split_whitespace().count())
        .with_context(|| format!("unknown family {family:?}"))?;
    if params.len() != arity {
        bail!("family {family} takes {arity} parameter(s), got {}", params.len());
    }
    let n = |i, name| int(params, i, name);
    Ok(match family {
        "path" => plain(path(n(0, "n")?)?),
        "cycle" => plain(cycle(n(0, "n")?)?),
        "complete" => plain(complete(n(0, "n")?)?),
        "empty" => {
            let n = n(0, "n")?;
            if n == 0 {
                bail!("empty graph needs at least one vertex");
            }
            plain(edgeless(n))
        }
        "star" => plain(star(n(0, "n")?)),
        "subdivstar" => plain(subdivided_star(n(0, "t")?)),
        "petersen" => plain(generalized_petersen(n(0, "n")?, n(1, "k")?)?),
        "multipartite" => plain(complete_multipartite(sizes(params)?.sizes())?),
        "cyclesq" => plain(cycle_square(n(0, "n")?)?),
        "sgraph" => {
            let n = n(0, "n")?;
            Built { graph: s_graph(n)?, landmarks: Some((0..g_of(n)).collect()) }
        }
        "sgraphbs" => {
            let (b, s) = (n(0, "b")?, n(1, "s")?);
            let graph = s_graph_bs(b, s)?;
            let q = 1usize << b;
            Built { graph, landmarks: Some((q..q + b).collect()) }
        }
        "irreducible" => plain(irreducible_of(n(0, "n")?, n(1, "b")?)?),
        "embed" => {
            let g = load_graph(&PathBuf::from(&params[0]))?;
            let (graph, _) = embed_in_irreducible(&g)?;
            let order = graph.order();
            let k = g_of(order);
            Built { graph, landmarks: Some((order - k..order).collect()) }
        }
        "sharpness" => {
            let x = sharpness_family(n(0, "k")?, n(1, "d")?)?;
            plain(complete_multipartite(x.sizes())?)
        }
        "mpthreshold" => {
            let (graph, w) = multipartite_threshold_graph(&sizes(params)?)?;
            Built { graph, landmarks: Some(w) }
        }
        _ => unreachable!("family table and match disagree"),
    })
}
