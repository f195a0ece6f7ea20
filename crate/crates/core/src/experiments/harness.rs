//! Trial-parallel execution with order-independent aggregation.

use std::sync::mpsc;
use std::thread;

/// Runs `trial(t)` for every `t` in `0..trials` on `workers` threads. Worker
/// `w` takes trials `w, w + workers, ...` and sends each result down a
/// channel; `fold` must be commutative so that the aggregate does not depend
/// on arrival order.
pub fn run_trials<T, A, F, G>(trials: usize, workers: usize, init: A, trial: F, mut fold: G) -> A
where
    T: Send,
    F: Fn(usize) -> T + Sync,
    G: FnMut(A, T) -> A,
{
    let workers = workers.clamp(1, trials.max(1));
    if workers == 1 {
        return (0..trials).map(&trial).fold(init, fold);
    }
    let (tx, rx) = mpsc::channel();
    thread::scope(|scope| {
        for w in 0..workers {
            let tx = tx.clone();
            let trial = &trial;
            scope.spawn(move || {
                for t in (w..trials).step_by(workers) {
                    if tx.send(trial(t)).is_err() {
                        return;
                    }
                }
            });
        }
        drop(tx);
        let mut acc = init;
        for item in rx {
            acc = fold(acc, item);
        }
        acc
    })
}

/// Worker count from the machine, at least one.
pub fn default_workers() -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}
