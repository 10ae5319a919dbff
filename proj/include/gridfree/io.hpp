#pragma once

#include <string>

#include "gridfree/cores.hpp"
#include "gridfree/hypergraph.hpp"
#include "gridfree/pattern.hpp"

namespace gridfree {

/// trihyper-v1 JSON:
/// {"format":"trihyper-v1","p":13,"construction":"qr","x_set":"qr","a_set":"qnr",
///  "parts":{"X":[...],"Y":[...],"Z":[...]},"edges":[[x,y,z],...]}
std::string trihyper_to_json(const TripartiteHypergraph& h);
TripartiteHypergraph trihyper_from_json(const std::string& text);

/// Plain-text edge list: '#'-prefixed header lines with the provenance and
/// parts, then one "x y z" line per edge.
std::string trihyper_to_text(const TripartiteHypergraph& h);
TripartiteHypergraph trihyper_from_text(const std::string& text);

void save_trihyper(const TripartiteHypergraph& h, const std::string& path,
                   bool as_text = false);
/// Sniffs JSON vs text on the first non-whitespace byte.
TripartiteHypergraph load_trihyper(const std::string& path);

/// pattern-v1 JSON:
/// {"format":"pattern-v1","name":"grid3x3","vertices":9,"edges":[[0,3,6],...]}
std::string pattern_to_json(const Pattern& f);
Pattern pattern_from_json(const std::string& text);
void save_pattern(const Pattern& f, const std::string& path);
Pattern load_pattern(const std::string& path);

/// Resolves "grid" / "grid3x3" / "triangle" to the built-ins, anything else
/// as a pattern-v1 file path.
Pattern resolve_pattern(const std::string& name_or_path);

/// Catalog directory layout: index.json plus one pattern-v1 file per entry.
void save_catalog(const CoreCatalog& catalog, const std::string& dir);
/// Reloads and re-validates every entry (linearity, min degree, vertex cap,
/// canonical form match). Throws std::runtime_error on any mismatch.
CoreCatalog load_catalog(const std::string& dir);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gridfree
