//! Range coder internals: 63-bit low/high state, frequency total 2^40,
//! straddle ("middle") expansion with pending-bit bookkeeping in the style of
//! Witten, Neal and Cleary.

use super::stream::CodeStream;
use super::{CodingError, SymbolModel, MAX_ALPHABET, PROB_FLOOR};

const STATE_BITS: u32 = 63;
const TOP: u64 = 1 << STATE_BITS;
const HALF: u64 = TOP >> 1;
const QUARTER: u64 = TOP >> 2;
const THREE_QUARTERS: u64 = HALF + QUARTER;

/// Frequency precision: distributions are quantized to integers summing to
/// exactly 2^FREQ_BITS.
const FREQ_BITS: u32 = 40;
const FREQ_TOTAL: u64 = 1 << FREQ_BITS;

/// Bits the decoder may read past the payload end. A legitimate decode needs
/// the 63-bit initial window minus the flush bit; anything deeper means the
/// payload was truncated.
const TAIL_SLACK: usize = 64;

/// Quantize a predictive distribution to integer frequencies summing to
/// FREQ_TOTAL, every entry >= 1. Validates the model contract on the way.
fn quantize(dist: &[f64]) -> Result<Vec<u64>, CodingError> {
    let n = dist.len();
    if n == 0 || n > MAX_ALPHABET {
        return Err(CodingError::Model(format!(
            "alphabet size {n} outside 1..={MAX_ALPHABET}"
        )));
    }
    let mut sum = 0.0;
    for &p in dist {
        if !(p > 0.0) {
            return Err(CodingError::Model(format!(
                "distribution entry {p} is not strictly positive"
            )));
        }
        sum += p;
    }
    if (sum - 1.0).abs() > 1e-12 {
        return Err(CodingError::Model(format!(
            "distribution sums to {sum}, not 1 within 1e-12"
        )));
    }

    let clamped: Vec<f64> = dist.iter().map(|&p| p.max(PROB_FLOOR)).collect();
    let csum: f64 = clamped.iter().sum();
    let mut freqs: Vec<u64> = clamped
        .iter()
        .map(|&p| ((p / csum) * FREQ_TOTAL as f64).round().max(1.0) as u64)
        .collect();

    let total: u64 = freqs.iter().sum();
    let argmax = freqs
        .iter()
        .enumerate()
        .max_by_key(|(_, &f)| f)
        .map(|(i, _)| i)
        .unwrap();
    if total > FREQ_TOTAL {
        let excess = total - FREQ_TOTAL;
        debug_assert!(freqs[argmax] > excess);
        freqs[argmax] -= excess;
    } else {
        freqs[argmax] += FREQ_TOTAL - total;
    }
    Ok(freqs)
}

fn cumulative(freqs: &[u64]) -> Vec<u64> {
    let mut cum = Vec::with_capacity(freqs.len() + 1);
    let mut acc = 0u64;
    cum.push(0);
    for &f in freqs {
        acc += f;
        cum.push(acc);
    }
    debug_assert_eq!(acc, FREQ_TOTAL);
    cum
}

#[inline]
fn scale(span: u64, cum: u64) -> u64 {
    ((span as u128 * cum as u128) >> FREQ_BITS) as u64
}

struct BitWriter {
    bytes: Vec<u8>,
    bit_len: usize,
}

impl BitWriter {
    fn new() -> Self {
        BitWriter {
            bytes: Vec::new(),
            bit_len: 0,
        }
    }

    #[inline]
    fn push(&mut self, bit: bool) {
        if self.bit_len % 8 == 0 {
            self.bytes.push(0);
        }
        if bit {
            let idx = self.bit_len / 8;
            self.bytes[idx] |= 0x80 >> (self.bit_len % 8);
        }
        self.bit_len += 1;
    }

    #[inline]
    fn push_with_pending(&mut self, bit: bool, pending: &mut usize) {
        self.push(bit);
        while *pending > 0 {
            self.push(!bit);
            *pending -= 1;
        }
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    bit_len: usize,
    pos: usize,
}

impl<'a> BitReader<'a> {
    fn new(stream: &'a CodeStream) -> Self {
        BitReader {
            bytes: stream.payload(),
            bit_len: stream.len_bits(),
            pos: 0,
        }
    }

    /// Reads the next bit; zero-fills up to TAIL_SLACK bits past the payload
    /// (the encoder's flush leaves the tail implicit), errors beyond that.
    #[inline]
    fn next(&mut self) -> Result<bool, CodingError> {
        let pos = self.pos;
        self.pos += 1;
        if pos < self.bit_len {
            Ok(self.bytes[pos / 8] & (0x80 >> (pos % 8)) != 0)
        } else if pos < self.bit_len + TAIL_SLACK {
            Ok(false)
        } else {
            Err(CodingError::CorruptStream(format!(
                "payload exhausted after {} bits",
                self.bit_len
            )))
        }
    }
}

pub(super) fn encode<M: SymbolModel + ?Sized>(
    symbols: &[usize],
    model: &mut M,
) -> Result<CodeStream, CodingError> {
    let alphabet = model.alphabet_size();
    let mut out = BitWriter::new();
    let mut low = 0u64;
    let mut high = TOP - 1;
    let mut pending = 0usize;

    for (index, &symbol) in symbols.iter().enumerate() {
        if symbol >= alphabet {
            return Err(CodingError::InvalidSymbol {
                index,
                symbol,
                alphabet,
            });
        }
        let dist = model.next_distribution();
        if dist.len() != alphabet {
            return Err(CodingError::Model(format!(
                "model returned {} entries for alphabet of size {alphabet}",
                dist.len()
            )));
        }
        let cum = cumulative(&quantize(&dist)?);

        let span = high - low + 1;
        high = low + scale(span, cum[symbol + 1]) - 1;
        low += scale(span, cum[symbol]);

        loop {
            if high < HALF {
                out.push_with_pending(false, &mut pending);
            } else if low >= HALF {
                out.push_with_pending(true, &mut pending);
                low -= HALF;
                high -= HALF;
            } else if low >= QUARTER && high < THREE_QUARTERS {
                pending += 1;
                low -= QUARTER;
                high -= QUARTER;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
        }
        model.update(symbol);
    }

    if !symbols.is_empty() {
        // Select the quarter that pins down the final interval.
        pending += 1;
        out.push_with_pending(low >= QUARTER, &mut pending);
    }

    Ok(CodeStream::from_parts(
        symbols.len() as u64,
        out.bytes,
        out.bit_len,
    ))
}

pub(super) fn decode<M: SymbolModel + ?Sized>(
    stream: &CodeStream,
    model: &mut M,
) -> Result<Vec<usize>, CodingError> {
    let alphabet = model.alphabet_size();
    let count = stream.symbol_count() as usize;
    let mut symbols = Vec::with_capacity(count);
    if count == 0 {
        return Ok(symbols);
    }

    let mut reader = BitReader::new(stream);
    let mut code = 0u64;
    for _ in 0..STATE_BITS {
        code = (code << 1) | reader.next()? as u64;
    }
    let mut low = 0u64;
    let mut high = TOP - 1;

    for _ in 0..count {
        let dist = model.next_distribution();
        if dist.len() != alphabet {
            return Err(CodingError::Model(format!(
                "model returned {} entries for alphabet of size {alphabet}",
                dist.len()
            )));
        }
        let cum = cumulative(&quantize(&dist)?);

        let span = high - low + 1;
        let offset = code - low;
        let value = ((((offset as u128) + 1) << FREQ_BITS) - 1) / span as u128;
        let value = value as u64;
        // Greatest s with cum[s] <= value.
        let symbol = match cum.binary_search(&value) {
            Ok(i) => i.min(alphabet - 1),
            Err(i) => i - 1,
        };

        high = low + scale(span, cum[symbol + 1]) - 1;
        low += scale(span, cum[symbol]);
        debug_assert!(low <= code && code <= high);

        loop {
            if high < HALF {
                // nothing to subtract
            } else if low >= HALF {
                low -= HALF;
                high -= HALF;
                code -= HALF;
            } else if low >= QUARTER && high < THREE_QUARTERS {
                low -= QUARTER;
                high -= QUARTER;
                code -= QUARTER;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            code = (code << 1) | reader.next()? as u64;
        }
        symbols.push(symbol);
        model.update(symbol);
    }
    Ok(symbols)
}
