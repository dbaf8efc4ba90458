//! Small unit-capacity max-flow (Dinic) backing the flow-based cut checks.

pub(crate) struct FlowNetwork {
    peers: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    pub(crate) fn new(n: usize) -> FlowNetwork {
        FlowNetwork {
            peers: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: i64) {
        let id = self.to.len();
        self.peers[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.peers[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
    }

    fn levels(&self, source: usize) -> Vec<i32> {
        let mut level = vec![-1; self.peers.len()];
        level[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.peers[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] < 0 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(
        &mut self,
        u: usize,
        sink: usize,
        pushed: i64,
        level: &[i32],
        next: &mut [usize],
    ) -> i64 {
        if u == sink {
            return pushed;
        }
        while next[u] < self.peers[u].len() {
            let e = self.peers[u][next[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let flow = self.augment(v, sink, pushed.min(self.cap[e]), level, next);
                if flow > 0 {
                    self.cap[e] -= flow;
                    self.cap[e ^ 1] += flow;
                    return flow;
                }
            }
            next[u] += 1;
        }
        0
    }

    pub(crate) fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.levels(source);
            if level[sink] < 0 {
                return total;
            }
            let mut next = vec![0; self.peers.len()];
            loop {
                let pushed = self.augment(source, sink, i64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    /// Nodes reachable from `source` in the residual network; after a
    /// max-flow run, the complement is the sink side of a minimum cut.
    pub(crate) fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let level = self.levels(source);
        level.iter().map(|&l| l >= 0).collect()
    }
}
