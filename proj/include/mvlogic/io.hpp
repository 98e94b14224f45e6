#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mvlogic/canonical.hpp"
#include "mvlogic/semantics.hpp"

namespace mvlogic::io {

using nlohmann::json;

// Reads and parses a JSON file; InputError on I/O or syntax problems.
json read_json(const std::filesystem::path& path);

// Raw tables of an algebra file, not yet validated (built-in kinds yield their chain tables).
AlgebraTables tables_from_json(const json& j);
// {"kind": ..., "size": n, optional custom tables}.
AlgebraPtr algebra_from_json(const json& j);
// Inline spec ("lukasiewicz:5"), else a path to an algebra file.
AlgebraPtr algebra_from_arg(const std::string& arg);
json to_json(const TruthAlgebra& alg);

// "algebra" may be an object, an inline spec string, or a file path relative
// to base_dir.
Context context_from_json(const json& j, const std::filesystem::path& base_dir = {});
// Context plus optional R_box, R_diamond, R_rhd and R_lhd matrices.
FramePtr frame_from_json(const json& j, const std::filesystem::path& base_dir = {});
// Frame plus "V": {atom: {"extent": [...]} | {"intent": [...]}}.
Model model_from_json(const json& j, const std::filesystem::path& base_dir = {});
ModalLattice modal_lattice_from_json(const json& j);

Context load_context(const std::filesystem::path& path);
FramePtr load_frame(const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);
ModalLattice load_modal_lattice(const std::filesystem::path& path);

json to_json(const MvSet& s);
json to_json(const Concept& c);
json to_json(const ConceptLattice& lattice);
json to_json(const CompatibilityReport& report);
json to_json(const ValidityVerdict& verdict, const ConceptLattice& lattice);
json to_json(const SoundnessReport& report, const ConceptLattice* lattice = nullptr);
json to_json(const LemmaReport& report);
json to_json(const CanonicalSurrogate& s);

}  // namespace mvlogic::io
