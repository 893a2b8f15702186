//! Self-delimiting coded streams.
//!
//! On-disk format, bit-exact across platforms:
//!   magic "KCS1" | u64 big-endian symbol count | payload bits, MSB-first,
//!   zero-padded to a byte boundary.
//!
//! The in-memory form additionally tracks the exact payload bit length so
//! codelength bounds can be checked without the padding.

use super::CodingError;

const MAGIC: &[u8; 4] = b"KCS1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeStream {
    symbol_count: u64,
    payload: Vec<u8>,
    bit_len: usize,
}

impl CodeStream {
    pub(super) fn from_parts(symbol_count: u64, payload: Vec<u8>, bit_len: usize) -> Self {
        debug_assert!(bit_len <= payload.len() * 8 && payload.len() * 8 < bit_len + 8);
        CodeStream {
            symbol_count,
            payload,
            bit_len,
        }
    }

    pub fn symbol_count(&self) -> u64 {
        self.symbol_count
    }

    /// Exact payload length in bits, excluding byte padding and header.
    pub fn len_bits(&self) -> usize {
        self.bit_len
    }

    /// Total serialized size in bits: header plus byte-padded payload. This
    /// is the honest "size of the compressed file" figure.
    pub fn total_bits(&self) -> usize {
        (MAGIC.len() + 8 + self.payload.len()) * 8
    }

    pub fn payload(&self) -> &[u8] {
        &self.payload
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(12 + self.payload.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&self.symbol_count.to_be_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    /// Parses the on-disk format. The exact bit length is not stored, so it
    /// is recovered as the padded length; decoding tolerates the padding.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CodingError> {
        if bytes.len() < 12 {
            return Err(CodingError::CorruptStream(format!(
                "stream of {} bytes is shorter than the 12-byte header",
                bytes.len()
            )));
        }
        if &bytes[..4] != MAGIC {
            return Err(CodingError::CorruptStream(
                "bad magic, expected KCS1".into(),
            ));
        }
        let mut count_bytes = [0u8; 8];
        count_bytes.copy_from_slice(&bytes[4..12]);
        let payload = bytes[12..].to_vec();
        let bit_len = payload.len() * 8;
        Ok(CodeStream {
            symbol_count: u64::from_be_bytes(count_bytes),
            payload,
            bit_len,
        })
    }

    /// Test/diagnostic helper: a copy with the payload cut to `bits` bits.
    pub fn truncated(&self, bits: usize) -> CodeStream {
        let bits = bits.min(self.bit_len);
        let bytes = bits.div_ceil(8);
        let mut payload = self.payload[..bytes].to_vec();
        if bits % 8 != 0 {
            let keep = 0xffu8 << (8 - bits % 8);
            if let Some(last) = payload.last_mut() {
                *last &= keep;
            }
        }
        CodeStream {
            symbol_count: self.symbol_count,
            payload,
            bit_len: bits,
        }
    }
}
