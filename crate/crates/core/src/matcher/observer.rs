/// Why a position holding the wanted symbol was not attached as a child.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rejection {
    /// Consumed by an earlier occurrence.
    Used,
    /// The node key was created under another parent.
    AlreadyCreated,
    /// The negative element appears in the interior, or the interior is empty
    /// under [`EmptyGapPolicy::Reject`](crate::EmptyGapPolicy::Reject).
    Negative,
}

/// Instrumentation hook for the matcher. Levels and positions are 1-based.
/// `()` ignores everything.
pub trait MatchObserver {
    fn node_created(&mut self, _level: usize, _position: usize) {}
    fn candidate_rejected(&mut self, _level: usize, _position: usize, _reason: Rejection) {}
    fn node_dead(&mut self, _level: usize, _position: usize) {}
    /// `path` holds 0-based positions.
    fn occurrence_found(&mut self, _path: &[usize]) {}
}

impl MatchObserver for () {}

/// Counts created nodes.
#[derive(Debug, Clone, Copy, Default)]
pub struct NodeCounter {
    pub created: usize,
}

impl MatchObserver for NodeCounter {
    fn node_created(&mut self, _level: usize, _position: usize) {
        self.created += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Created { level: usize, position: usize },
    Rejected { level: usize, position: usize, reason: Rejection },
    Dead { level: usize, position: usize },
    Found(Vec<usize>),
}

/// Records every event in order.
#[derive(Debug, Clone, Default)]
pub struct TraceRecorder {
    pub events: Vec<TraceEvent>,
}

impl MatchObserver for TraceRecorder {
    fn node_created(&mut self, level: usize, position: usize) {
        self.events.push(TraceEvent::Created { level, position });
    }

    fn candidate_rejected(&mut self, level: usize, position: usize, reason: Rejection) {
        self.events.push(TraceEvent::Rejected { level, position, reason });
    }

    fn node_dead(&mut self, level: usize, position: usize) {
        self.events.push(TraceEvent::Dead { level, position });
    }

    fn occurrence_found(&mut self, path: &[usize]) {
        self.events.push(TraceEvent::Found(path.iter().map(|p| p + 1).collect()));
    }
}
