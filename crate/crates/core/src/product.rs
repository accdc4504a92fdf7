//! Cartesian products `G □ H` and the coordinate bookkeeping around them.
//!
//! Product vertex `(g, h)` is flattened to `g * h_size + h`, so an `H`-layer
//! `^gH` is a contiguous block of indices and a `G`-layer `G^h` is a stride.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// Selects one factor of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductDims {
    pub g_size: usize,
    pub h_size: usize,
}

/// Image of a product edge under a projection: an edge of the factor or a single vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    Edge(Edge),
    Vertex(usize),
}

impl ProductDims {
    pub fn new(g_size: usize, h_size: usize) -> Self {
        ProductDims { g_size, h_size }
    }

    pub fn order(&self) -> usize {
        self.g_size * self.h_size
    }

    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.g_size && h < self.h_size);
        g * self.h_size + h
    }

    #[inline]
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.h_size, v % self.h_size)
    }

    /// Coordinate of `v` in the chosen factor (the projection `p_G` or `p_H`).
    pub fn project(&self, v: usize, factor: Factor) -> usize {
        let (g, h) = self.coords(v);
        match factor {
            Factor::First => g,
            Factor::Second => h,
        }
    }

    /// The `H`-layer `^gH` through first-factor vertex `g`.
    pub fn h_layer(&self, g: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.h_size).map(move |h| self.index(g, h))
    }

    /// The `G`-layer `G^h` through second-factor vertex `h`.
    pub fn g_layer(&self, h: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.g_size).map(move |g| self.index(g, h))
    }

    pub fn check_graph(&self, product: &Graph) -> Result<()> {
        if product.order() != self.order() {
            return Err(Error::argument(format!(
                "dims {}x{} do not match a graph of order {}",
                self.g_size,
                self.h_size,
                product.order()
            )));
        }
        Ok(())
    }

    /// Maps a vertex set given as `(g, h)` pairs to flat product indices.
    pub fn set_from_pairs<I>(&self, pairs: I) -> VertexSet
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        pairs.into_iter().map(|(g, h)| self.index(g, h)).collect()
    }
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> (Graph, ProductDims) {
    let dims = ProductDims::new(g.order(), h.order());
    let mut edges = Vec::with_capacity(g.size() * h.order() + g.order() * h.size());
    for (a, b) in g.edges() {
        for y in h.vertices() {
            edges.push((dims.index(a, y), dims.index(b, y)));
        }
    }
    for x in g.vertices() {
        for (a, b) in h.edges() {
            edges.push((dims.index(x, a), dims.index(x, b)));
        }
    }
    let p = Graph::from_edges(dims.order(), edges).expect("product of simple graphs is simple");
    (p, dims)
}

/// Projects the product edge `(u, v)` onto the chosen factor.
///
/// Fails when the endpoints differ in both coordinates, since no product edge does.
pub fn project_edge(dims: ProductDims, e: Edge, factor: Factor) -> Result<Projection> {
    let (u, v) = e;
    if u >= dims.order() || v >= dims.order() {
        return Err(Error::argument(format!(
            "({u},{v}) is outside a product of order {}",
            dims.order()
        )));
    }
    let (ug, uh) = dims.coords(u);
    let (vg, vh) = dims.coords(v);
    let (same_other, a, b) = match factor {
        Factor::First => (uh == vh, ug, vg),
        Factor::Second => (ug == vg, uh, vh),
    };
    if (ug != vg) && (uh != vh) || u == v {
        return Err(Error::argument(format!(
            "({ug},{uh})-({vg},{vh}) is not a product edge"
        )));
    }
    Ok(if same_other {
        Projection::Edge((a.min(b), a.max(b)))
    } else {
        Projection::Vertex(a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        let (p, _) = cartesian_product(&Graph::path(2), &Graph::path(2));
        assert_eq!((p.order(), p.size()), (4, 4));
        assert!(p.vertices().all(|v| p.degree(v) == 2));
        assert_eq!(p.diameter(), Some(2));

        let (k, _) = cartesian_product(&Graph::complete(3), &Graph::complete(3));
        assert_eq!((k.order(), k.size()), (9, 18));
        assert!(k.vertices().all(|v| k.degree(v) == 4));

        let (pk, _) = cartesian_product(&Graph::path(4), &Graph::complete(3));
        assert_eq!((pk.order(), pk.size()), (12, 21));
    }

    #[test]
    fn projections() {
        let dims = ProductDims::new(4, 2);
        let e = (dims.index(0, 0), dims.index(1, 0));
        assert_eq!(project_edge(dims, e, Factor::First).unwrap(), Projection::Edge((0, 1)));
        assert_eq!(project_edge(dims, e, Factor::Second).unwrap(), Projection::Vertex(0));

        let vertical = (dims.index(0, 0), dims.index(0, 1));
        assert_eq!(project_edge(dims, vertical, Factor::First).unwrap(), Projection::Vertex(0));

        let diagonal = (dims.index(0, 0), dims.index(1, 1));
        assert!(project_edge(dims, diagonal, Factor::First).is_err());
    }

    #[test]
    fn layers() {
        let dims = ProductDims::new(3, 4);
        assert_eq!(dims.h_layer(1).collect::<Vec<_>>(), vec![4, 5, 6, 7]);
        assert_eq!(dims.g_layer(2).collect::<Vec<_>>(), vec![2, 6, 10]);
        assert_eq!(dims.coords(dims.index(2, 3)), (2, 3));
    }
}
