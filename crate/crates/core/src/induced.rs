//! Induced-subgraph search for small hosts.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Finds an injective map `φ: V(pattern) → V(host)` with `uv ∈ E(pattern)`
/// iff `φ(u)φ(v) ∈ E(host)`. The first map in lexicographic order is returned.
pub fn is_induced_subgraph(pattern: &Graph, host: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    if host.order() > cap {
        return Err(Error::CapExceeded { what: "host order for induced-subgraph search", size: host.order(), cap });
    }
    if pattern.order() > host.order() {
        return Ok(None);
    }
    let mut map = Vec::with_capacity(pattern.order());
    let mut used = vec![false; host.order()];
    Ok(extend(pattern, host, &mut map, &mut used).then_some(map))
}

fn extend(pattern: &Graph, host: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = map.len();
    if i == pattern.order() {
        return true;
    }
    let deg = pattern.degree(i);
    for x in 0..host.order() {
        if used[x] || host.degree(x) < deg {
            continue;
        }
        if map.iter().enumerate().all(|(j, &y)| pattern.has_edge(i, j) == host.has_edge(x, y)) {
            map.push(x);
            used[x] = true;
            if extend(pattern, host, map, used) {
                return true;
            }
            used[x] = false;
            map.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn p3_in_c4() {
        let m = is_induced_subgraph(&path(3).unwrap(), &cycle(4).unwrap(), 12).unwrap();
        assert_eq!(m, Some(vec![0, 1, 2]));
    }

    #[test]
    fn triangle_not_in_c4() {
        assert_eq!(is_induced_subgraph(&complete(3).unwrap(), &cycle(4).unwrap(), 12).unwrap(), None);
    }

    #[test]
    fn induced_not_just_subgraph() {
        // P_4 is a subgraph of K_4 but not an induced one
        assert_eq!(is_induced_subgraph(&path(4).unwrap(), &complete(4).unwrap(), 12).unwrap(), None);
        assert!(is_induced_subgraph(&path(2).unwrap(), &cycle(13).unwrap(), 12).is_err());
    }
}
