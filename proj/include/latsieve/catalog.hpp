#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latsieve/group.hpp"
#include "latsieve/lattice.hpp"
#include "latsieve/model.hpp"

namespace latsieve {

// Parsed group-definition file. The body is a generator block or an explicit
// table block; an action block turns the body into the normal part of a
// semidirect product; a model block (body optional) describes a coprime
// action system on elementary abelian blocks.
struct GroupFile {
    std::string name;

    // generator body
    int degree = 0;
    std::vector<std::string> perm_lines;

    // table body
    int table_order = 0;
    std::vector<int> table;  // row-major

    // action block
    int action_degree = 0;
    std::vector<std::string> actgen_lines;
    std::vector<std::string> actmap_lines;  // cycles over 1..|N| element indices

    // model block
    std::optional<CoprimeActionSystem> model;

    bool has_generator_body() const { return degree > 0; }
    bool has_table_body() const { return table_order > 0; }
    bool has_body() const { return has_generator_body() || has_table_body(); }
    bool has_action() const { return action_degree > 0; }
};

// Grammar: `group <name>`; then `degree <n>` with `perm (...)` lines or
// `table <n>` with n whitespace-separated rows; optional
// `action degree <m>` with paired `actgen (...)` / `actmap (...)` lines;
// optional `model <ngens>` with `block H|J <p> <d>` headers each followed by
// ngens d-row matrices. Comments start with '#'.
GroupFile parse_group_file(const std::string& text);
std::string write_group_file(const GroupFile& f);

// Realizes the file as a group (errors if only a model block is present).
GroupTable realize_group(const GroupFile& f, const GroupCaps& caps = {});

struct CorpusEntry {
    std::string id;
    std::string recipe;  // display form of the constructor
    long long expected_order = 0;
    std::vector<std::string> tags;
    // set for coprime direct-product entries
    std::string factor_a, factor_b;
};

struct CorpusManifest {
    std::string version;
    std::vector<CorpusEntry> entries;
};

const CorpusManifest& builtin_corpus();
bool is_builtin(const std::string& id);
GroupTable build_builtin(const std::string& id, const GroupCaps& caps = {});
// The coprime-action system exercised by the validation harness.
const std::string& builtin_model_text();

// Persistent lattice cache, keyed by the content hash of the multiplication
// table. env LATSIEVE_CACHE overrides the default `.latsieve-cache/`;
// `store_dir` argument wins over both.
std::string resolve_cache_dir(const std::string& explicit_dir = "");
std::shared_ptr<const SubgroupLattice> lattice_cache(const std::string& store_dir,
                                                     const GroupTable& g,
                                                     const LatticeCaps& caps = {});
std::string cache_file_path(const std::string& store_dir, const GroupTable& g);

}  // namespace latsieve
