//! The OM spectrum split across worker threads.

use std::num::NonZeroUsize;
use std::thread;

use omqm_core::omqm::{spectrum_rows, OMConstants, OMSpectrumRow, RankPairing};
use omqm_core::zeta::ZetaZero;

use crate::error::AppResult;

/// Rows for `N = 1..=nmax`, computed by `threads` workers over contiguous
/// blocks and concatenated in order, so the result does not depend on the
/// thread count.
pub fn parallel_spectrum(
    nmax: u64,
    zeros: &[ZetaZero],
    constants: &OMConstants,
    threads: NonZeroUsize,
) -> AppResult<Vec<OMSpectrumRow>> {
    if nmax == 0 {
        return Ok(Vec::new());
    }
    let workers = (threads.get() as u64).min(nmax);
    let block = nmax.div_ceil(workers);
    let ranges: Vec<(u64, u64)> = (0..workers)
        .map(|w| (w * block + 1, ((w + 1) * block).min(nmax)))
        .filter(|(a, b)| a <= b)
        .collect();
    let parts: Vec<_> = thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(a, b)| scope.spawn(move || spectrum_rows(a..=b, zeros, constants, &RankPairing)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("spectrum worker panicked"))
            .collect()
    });
    let mut rows = Vec::with_capacity(nmax as usize);
    for part in parts {
        rows.extend(part?);
    }
    Ok(rows)
}
