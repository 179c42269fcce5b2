use std::io::Write;
use std::path::Path;

use tempfile::NamedTempFile;

use crate::error::{RepairError, Result};

/// Writes `bytes` to a sibling temp file, then renames it over `path`, so a
/// failed write never leaves a partial file behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let io_err = |context, source| RepairError::Io {
        context,
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| io_err("creating temp file", e))?;
    tmp.write_all(bytes)
        .and_then(|_| tmp.as_file().sync_all())
        .map_err(|e| io_err("writing", e))?;
    tmp.persist(path)
        .map_err(|e| io_err("renaming into place", e.error))?;
    Ok(())
}
