use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection from the vertices of a graph onto `[1, n]`, together with
/// the strength it induces: the maximum of `f(u) + f(v)` over the edges.
/// The strength is `None` exactly when the graph has no edges.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Numbering {
    labels: Vec<u32>,
    strength_value: Option<u32>,
}

impl Numbering {
    /// Validates `labels` (indexed by vertex, values a permutation of
    /// `[1, n]`) against `g` and records the induced strength.
    pub fn new(g: &Graph, labels: Vec<u32>) -> Result<Self> {
        let n = g.order();
        if labels.len() != n {
            return Err(Error::Domain(format!(
                "numbering has {} labels for order {n}",
                labels.len()
            )));
        }
        let mut seen = vec![false; n];
        for &l in &labels {
            if l < 1 || l as usize > n || seen[(l - 1) as usize] {
                return Err(Error::Domain(format!(
                    "labels are not a bijection onto [1,{n}]"
                )));
            }
            seen[(l - 1) as usize] = true;
        }
        let strength_value = g.edges().iter().map(|&(u, v)| labels[u] + labels[v]).max();
        Ok(Numbering {
            labels,
            strength_value,
        })
    }

    /// Labels indexed by vertex; values are 1-based.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn strength_value(&self) -> Option<u32> {
        self.strength_value
    }
}

/// The strength of a numbering: the maximum edge label. Errors on an
/// edgeless graph, where the maximum does not exist.
pub fn strength_of_numbering(g: &Graph, f: &Numbering) -> Result<u32> {
    if f.labels.len() != g.order() {
        return Err(Error::Domain("numbering does not match graph order".into()));
    }
    g.edges()
        .iter()
        .map(|&(u, v)| f.labels[u] + f.labels[v])
        .max()
        .ok_or(Error::EdgelessGraph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strength_of_simple_numberings() {
        let k2 = Graph::complete(2).unwrap();
        let f = Numbering::new(&k2, vec![1, 2]).unwrap();
        assert_eq!(strength_of_numbering(&k2, &f).unwrap(), 3);

        // P_3 with center labeled 1: the optimal numbering, max label 4
        let p3 = Graph::star(3).unwrap();
        let f = Numbering::new(&p3, vec![1, 2, 3]).unwrap();
        assert_eq!(strength_of_numbering(&p3, &f).unwrap(), 4);
        assert_eq!(f.strength_value(), Some(4));

        // K_3: labels 2 and 3 always meet
        let k3 = Graph::complete(3).unwrap();
        for labels in [[1, 2, 3], [3, 1, 2], [2, 3, 1]] {
            let f = Numbering::new(&k3, labels.to_vec()).unwrap();
            assert_eq!(strength_of_numbering(&k3, &f).unwrap(), 5);
        }
    }

    #[test]
    fn rejects_non_bijections() {
        let g = Graph::complete(3).unwrap();
        assert!(Numbering::new(&g, vec![1, 1, 2]).is_err());
        assert!(Numbering::new(&g, vec![0, 1, 2]).is_err());
        assert!(Numbering::new(&g, vec![1, 2, 4]).is_err());
        assert!(Numbering::new(&g, vec![1, 2]).is_err());
    }

    #[test]
    fn edgeless_graph_has_no_strength() {
        let g = Graph::empty(3).unwrap();
        let f = Numbering::new(&g, vec![1, 2, 3]).unwrap();
        assert_eq!(f.strength_value(), None);
        assert_eq!(strength_of_numbering(&g, &f), Err(Error::EdgelessGraph));
    }
}
