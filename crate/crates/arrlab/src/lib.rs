//! Construction and fault-tolerance analysis of (n,k)-arrangement graphs.
//!
//! The crate builds arrangement graphs and their named special cases (complete
//! graphs, star graphs, alternating group graphs), injects vertex faults and
//! reports the structure of the survivor graph, computes exact vertex
//! connectivity, and implements comparison-based (MM*) fault diagnosis up to
//! conditional-diagnosability verification with explicit witness pairs.
//!
//! See the crate examples for runnable entry points to each capability; the
//! `arrlab` binary exposes the same operations as `gen`, `verify` and
//! `diagnose` subcommands.

pub mod arrangement;
pub mod diagnosis;
pub mod export;
pub mod fault;
pub mod graph;
pub mod verify;

pub use arrangement::{Arrangement, ArrangementGraph, FamilyTag, GraphParams};
pub use fault::{ComponentReport, FaultSet, StructureClass};
pub use graph::SimpleGraph;

/// Runs `f` on a pool of `ARRLAB_THREADS` workers when the variable is set,
/// otherwise on the default pool.
pub(crate) fn with_thread_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("ARRLAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(0);
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(f)
    } else {
        f()
    }
}
