//! The resolved diagram as a planar 4-valent graph.
//!
//! Every crossing of the front stays a crossing; every right cusp becomes a
//! crossing followed by a small loop; left cusps become smooth turns. Ports
//! at each vertex are numbered counterclockwise `NE, NW, SW, SE`.

use serde::{Deserialize, Serialize};

use super::disks::BasepointPolicy;
use crate::freealg::Gen;
use crate::front::FrontDiagram;

const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quadrant {
    Top,
    Left,
    Bottom,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corner {
    pub vertex: Gen,
    pub quadrant: Quadrant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub corners: Vec<Corner>,
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedDiagram {
    /// One vertex per generator, in generator order.
    pub vertices: Vec<Gen>,
    /// Arcs as pairs of half-edges `4 * vertex + port`.
    pub edges: Vec<(usize, usize)>,
    pub faces: Vec<Face>,
    /// Index into `edges` of the arc carrying the basepoint.
    pub basepoint: usize,
}

impl ResolvedDiagram {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Faces bounded by a single arc from a vertex back to itself.
    pub fn loop_faces(&self) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.corners.len() == 1 && f.corners[0].quadrant == Quadrant::Right).collect()
    }
}

fn quadrant(incoming: usize, outgoing: usize) -> Quadrant {
    match (incoming, outgoing) {
        (NE, SE) => Quadrant::Right,
        (NW, NE) => Quadrant::Top,
        (SW, NW) => Quadrant::Left,
        (SE, SW) => Quadrant::Bottom,
        _ => unreachable!("ports are visited clockwise"),
    }
}

pub fn resolve_front(front: &FrontDiagram, basepoint: BasepointPolicy) -> ResolvedDiagram {
    let n_cross = front.crossings().len();
    let strands = front.strands();
    let vertices: Vec<Gen> = front.generators().collect();

    // per position, the (vertex, left port, right port) events left to right
    let mut events: Vec<Vec<(usize, usize, Option<usize>)>> = vec![Vec::new(); strands + 1];
    for c in front.crossings() {
        events[c.upper].push((c.column, NW, Some(NE)));
        events[c.upper + 1].push((c.column, SW, Some(SE)));
    }
    for (i, rc) in front.right_cusps().iter().enumerate() {
        events[rc.upper].push((n_cross + i, NW, None));
        events[rc.upper + 1].push((n_cross + i, SW, None));
    }

    let he = |v: usize, p: usize| 4 * v + p;
    let mut edges = Vec::with_capacity(2 * vertices.len());
    for ev in events.iter().skip(1) {
        for pair in ev.windows(2) {
            let (v0, _, r0) = pair[0];
            let (v1, l1, _) = pair[1];
            edges.push((he(v0, r0.expect("only right cusps end a position")), he(v1, l1)));
        }
    }
    for i in 0..strands / 2 {
        let (a, la, _) = events[2 * i + 1][0];
        let (b, lb, _) = events[2 * i + 2][0];
        edges.push((he(a, la), he(b, lb)));
    }
    let first_loop = edges.len();
    for i in 0..front.right_cusps().len() {
        let v = n_cross + i;
        edges.push((he(v, NE), he(v, SE)));
    }

    let mut other = vec![usize::MAX; 4 * vertices.len()];
    let mut edge_of = vec![usize::MAX; 4 * vertices.len()];
    for (id, &(a, b)) in edges.iter().enumerate() {
        other[a] = b;
        other[b] = a;
        edge_of[a] = id;
        edge_of[b] = id;
    }

    let mut seen = vec![false; other.len()];
    let mut faces = Vec::new();
    for start in 0..other.len() {
        if seen[start] {
            continue;
        }
        let mut face = Face { corners: Vec::new(), edges: Vec::new() };
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            face.edges.push(edge_of[h]);
            let arrive = other[h];
            let (w, q) = (arrive / 4, arrive % 4);
            let out = (q + 3) % 4;
            face.corners.push(Corner { vertex: Gen::from_index(w), quadrant: quadrant(q, out) });
            h = he(w, out);
        }
        faces.push(face);
    }

    let basepoint = first_loop + basepoint.cusp_index(front.right_cusps().len());
    ResolvedDiagram { vertices, edges, faces, basepoint }
}
