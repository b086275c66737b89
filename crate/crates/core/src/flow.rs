//! Successive-shortest-path minimum-cost flow with unit steps.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
}

#[derive(Clone, Debug, Default)]
pub struct MinCostFlow {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        MinCostFlow {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, cost });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            cost: -cost,
        });
    }

    /// Pushes flow one shortest path at a time and returns the total cost
    /// after each augmentation: entry `r - 1` is the minimum cost of a flow
    /// of value `r`. Assumes no negative cycles in the input.
    pub fn successive_costs(&mut self, s: usize, t: usize) -> Vec<i64> {
        let n = self.out.len();
        let mut potential = self.bellman_ford(s);
        let mut totals = Vec::new();
        let mut total = 0i64;
        loop {
            // Dijkstra on reduced costs.
            let mut dist = vec![i64::MAX; n];
            let mut via = vec![usize::MAX; n];
            let mut heap = BinaryHeap::new();
            dist[s] = 0;
            heap.push(Reverse((0i64, s)));
            while let Some(Reverse((d, v))) = heap.pop() {
                if d > dist[v] {
                    continue;
                }
                for &a in &self.out[v] {
                    let arc = &self.arcs[a];
                    if arc.cap == 0 || potential[arc.to] == i64::MAX {
                        continue;
                    }
                    let nd = d + arc.cost + potential[v] - potential[arc.to];
                    if nd < dist[arc.to] {
                        dist[arc.to] = nd;
                        via[arc.to] = a;
                        heap.push(Reverse((nd, arc.to)));
                    }
                }
            }
            if dist[t] == i64::MAX {
                return totals;
            }
            for v in 0..n {
                if dist[v] != i64::MAX {
                    potential[v] += dist[v];
                }
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.arcs[a].cap -= 1;
                self.arcs[a ^ 1].cap += 1;
                total += self.arcs[a].cost;
                v = self.arcs[a ^ 1].to;
            }
            totals.push(total);
        }
    }

    fn bellman_ford(&self, s: usize) -> Vec<i64> {
        let n = self.out.len();
        let mut dist = vec![i64::MAX; n];
        let mut queued = vec![false; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            queued[v] = false;
            for &a in &self.out[v] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && dist[v] + arc.cost < dist[arc.to] {
                    dist[arc.to] = dist[v] + arc.cost;
                    if !queued[arc.to] {
                        queued[arc.to] = true;
                        queue.push_back(arc.to);
                    }
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_the_cheaper_route_first() {
        let mut f = MinCostFlow::new(4);
        f.add_arc(0, 1, 1, 1);
        f.add_arc(0, 2, 1, 5);
        f.add_arc(1, 3, 1, 1);
        f.add_arc(2, 3, 1, 1);
        assert_eq!(f.successive_costs(0, 3), vec![2, 8]);
    }

    #[test]
    fn reroutes_through_reverse_arcs() {
        // The greedy first path 0-1-2-3 has to be undone to carry two units.
        let mut f = MinCostFlow::new(4);
        f.add_arc(0, 1, 1, 0);
        f.add_arc(0, 2, 1, 3);
        f.add_arc(1, 2, 1, -2);
        f.add_arc(1, 3, 1, 0);
        f.add_arc(2, 3, 1, 0);
        assert_eq!(f.successive_costs(0, 3), vec![-2, 3]);
    }

    #[test]
    fn unreachable_sink() {
        let mut f = MinCostFlow::new(3);
        f.add_arc(0, 1, 1, 0);
        assert!(f.successive_costs(0, 2).is_empty());
    }
}
