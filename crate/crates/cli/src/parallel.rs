use std::thread;

use hochschild_core::flagfq::HochStratumCounter;

/// `counter.count()` with the unipotent range split across `threads` workers.
pub fn count_stratum(counter: &HochStratumCounter, threads: usize) -> u64 {
    let len = counter.len();
    let workers = threads.clamp(1, len.max(1));
    if workers == 1 {
        return counter.count();
    }
    let chunk = len.div_ceil(workers);
    let partial: u64 = thread::scope(|s| {
        let handles: Vec<_> = (0..len)
            .step_by(chunk)
            .map(|start| {
                let end = (start + chunk).min(len);
                s.spawn(move || counter.count_range(start..end))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("counting worker panicked"))
            .sum()
    });
    counter.finish(partial)
}

pub fn default_threads() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}
