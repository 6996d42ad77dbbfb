#include "latsieve/catalog.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace latsieve {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no + 1) + ": " + what);
}

}  // namespace

GroupFile parse_group_file(const std::string& text) {
    GroupFile f;
    auto lines = split_lines(text);

    enum class Section { Start, Body, Action, Model };
    Section section = Section::Start;
    int pending_table_rows = 0;
    ModelBlock* open_block = nullptr;
    int pending_matrix_rows = 0;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = strip(lines[i]);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream in(line);
        std::string word;
        in >> word;

        if (section == Section::Start) {
            if (word != "group") parse_fail(i, "expected 'group <name>'");
            in >> f.name;
            if (f.name.empty()) parse_fail(i, "missing group name");
            section = Section::Body;
            continue;
        }
        if (pending_table_rows > 0) {
            std::istringstream row(line);
            int v;
            int count = 0;
            while (row >> v) {
                f.table.push_back(v);
                ++count;
            }
            if (count != f.table_order) parse_fail(i, "table row has wrong width");
            --pending_table_rows;
            continue;
        }
        if (pending_matrix_rows > 0) {
            std::istringstream row(line);
            int v;
            std::vector<int> vals;
            while (row >> v) vals.push_back(v);
            if (static_cast<int>(vals.size()) != open_block->dim)
                parse_fail(i, "matrix row has wrong width");
            auto& mats = open_block->gen_matrices;
            if (mats.empty() || static_cast<int>(mats.back().size()) ==
                                    open_block->dim * open_block->dim)
                mats.emplace_back();
            mats.back().insert(mats.back().end(), vals.begin(), vals.end());
            --pending_matrix_rows;
            continue;
        }

        if (word == "degree") {
            if (f.has_body()) parse_fail(i, "duplicate body");
            if (!(in >> f.degree) || f.degree < 1) parse_fail(i, "bad degree");
        } else if (word == "perm") {
            if (f.degree < 1) parse_fail(i, "perm before degree");
            std::string rest = strip(line.substr(4));
            try {
                Perm::parse_cycles(rest, f.degree);  // syntax check now, realized later
            } catch (const Error& e) {
                parse_fail(i, e.what());
            }
            f.perm_lines.push_back(rest);
        } else if (word == "table") {
            if (f.has_body()) parse_fail(i, "duplicate body");
            if (!(in >> f.table_order) || f.table_order < 1) parse_fail(i, "bad table order");
            pending_table_rows = f.table_order;
        } else if (word == "action") {
            std::string kw;
            if (!(in >> kw) || kw != "degree") parse_fail(i, "expected 'action degree <n>'");
            if (!(in >> f.action_degree) || f.action_degree < 1) parse_fail(i, "bad action degree");
            section = Section::Action;
        } else if (word == "actgen") {
            if (section != Section::Action) parse_fail(i, "actgen outside action block");
            std::string rest = strip(line.substr(6));
            try {
                Perm::parse_cycles(rest, f.action_degree);
            } catch (const Error& e) {
                parse_fail(i, e.what());
            }
            f.actgen_lines.push_back(rest);
        } else if (word == "actmap") {
            if (section != Section::Action) parse_fail(i, "actmap outside action block");
            std::string rest = strip(line.substr(6));
            f.actmap_lines.push_back(rest);  // degree known only after realization
        } else if (word == "model") {
            CoprimeActionSystem sys;
            sys.name = f.name;
            if (!(in >> sys.num_generators) || sys.num_generators < 1)
                parse_fail(i, "bad model generator count");
            f.model = std::move(sys);
            section = Section::Model;
        } else if (word == "block") {
            if (section != Section::Model || !f.model) parse_fail(i, "block outside model");
            ModelBlock b;
            std::string tag;
            if (!(in >> tag >> b.p >> b.dim) || tag.size() != 1 || (tag[0] != 'H' && tag[0] != 'J'))
                parse_fail(i, "expected 'block H|J <p> <d>'");
            b.tag = tag[0];
            if (b.dim < 1) parse_fail(i, "bad block dimension");
            f.model->blocks.push_back(std::move(b));
            open_block = &f.model->blocks.back();
            pending_matrix_rows = f.model->num_generators * open_block->dim;
        } else {
            parse_fail(i, "unknown directive '" + word + "'");
        }
    }
    if (pending_table_rows > 0)
        throw Error(ErrorCode::ParseError, "table block ended before all rows were read");
    if (pending_matrix_rows > 0)
        throw Error(ErrorCode::ParseError, "model block ended before all matrices were read");
    if (!f.has_body() && !f.model)
        throw Error(ErrorCode::ParseError, "file has neither a body nor a model block");
    if (f.has_action() && (f.actgen_lines.empty() || f.actgen_lines.size() != f.actmap_lines.size()))
        throw Error(ErrorCode::ParseError, "action block needs matching actgen/actmap lines");
    return f;
}

std::string write_group_file(const GroupFile& f) {
    std::ostringstream out;
    out << "group " << f.name << "\n";
    if (f.has_generator_body()) {
        out << "degree " << f.degree << "\n";
        for (const auto& p : f.perm_lines) out << "perm " << p << "\n";
    } else if (f.has_table_body()) {
        out << "table " << f.table_order << "\n";
        for (int r = 0; r < f.table_order; ++r) {
            for (int c = 0; c < f.table_order; ++c) {
                if (c) out << ' ';
                out << f.table[static_cast<std::size_t>(r) * static_cast<std::size_t>(f.table_order) +
                               static_cast<std::size_t>(c)];
            }
            out << "\n";
        }
    }
    if (f.has_action()) {
        out << "action degree " << f.action_degree << "\n";
        for (std::size_t i = 0; i < f.actgen_lines.size(); ++i) {
            out << "actgen " << f.actgen_lines[i] << "\n";
            out << "actmap " << f.actmap_lines[i] << "\n";
        }
    }
    if (f.model) {
        out << "model " << f.model->num_generators << "\n";
        for (const auto& b : f.model->blocks) {
            out << "block " << b.tag << " " << b.p << " " << b.dim << "\n";
            for (const auto& m : b.gen_matrices)
                for (int r = 0; r < b.dim; ++r) {
                    for (int c = 0; c < b.dim; ++c) {
                        if (c) out << ' ';
                        out << m[static_cast<std::size_t>(r) * static_cast<std::size_t>(b.dim) +
                                 static_cast<std::size_t>(c)];
                    }
                    out << "\n";
                }
        }
    }
    return out.str();
}

GroupTable realize_group(const GroupFile& f, const GroupCaps& caps) {
    if (!f.has_body())
        throw Error(ErrorCode::ParseError,
                    "file '" + f.name + "' has no group body (model-only files cannot be realized)");
    GroupTable n;
    if (f.has_generator_body()) {
        std::vector<Perm> gens;
        for (const auto& line : f.perm_lines) gens.push_back(Perm::parse_cycles(line, f.degree));
        n = from_generators(f.degree, std::move(gens), f.name, caps);
    } else {
        n = from_table(f.name, f.table_order, f.table);
    }
    if (!f.has_action()) return n;

    std::vector<Perm> kgens;
    for (const auto& line : f.actgen_lines)
        kgens.push_back(Perm::parse_cycles(line, f.action_degree));
    GroupTable k = from_generators(f.action_degree, kgens, f.name + ".acting", caps);
    ActionSpec spec;
    spec.acting = &k;
    spec.target = &n;
    for (std::size_t i = 0; i < kgens.size(); ++i) {
        int idx = -1;
        for (int e = 0; e < k.order; ++e)
            if (k.perms[static_cast<std::size_t>(e)] == kgens[i]) {
                idx = e;
                break;
            }
        if (idx < 0) throw Error(ErrorCode::Internal, "action generator not found in closure");
        spec.generator_elements.push_back(idx);
        spec.images.push_back(Perm::parse_cycles(f.actmap_lines[i], n.order));
    }
    return semidirect_product(spec, f.name, caps);
}

// --- builtin corpus --------------------------------------------------------

namespace {

Perm cycle(const std::string& s, int degree) { return Perm::parse_cycles(s, degree); }

GroupTable perm_group(const std::string& name, int degree, std::vector<std::string> gens,
                      const GroupCaps& caps) {
    std::vector<Perm> ps;
    for (const auto& s : gens) ps.push_back(cycle(s, degree));
    return from_generators(degree, std::move(ps), name, caps);
}

// Automorphism of a cyclic group sending the generator class i to k*i.
Perm power_map(int n, long long k) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<int>((k * i) % n);
    return Perm(std::move(img));
}

// Permutation of an elementary abelian group p^d induced by a matrix, given
// the element indices of a basis.
Perm matrix_action_perm(const GroupTable& n, const std::vector<int>& basis, int p,
                        const std::vector<int>& mat) {
    const int d = static_cast<int>(basis.size());
    long long expect = 1;
    for (int i = 0; i < d; ++i) expect *= p;
    if (expect != n.order) throw Error(ErrorCode::Internal, "basis does not span the group");
    std::vector<int> coords(static_cast<std::size_t>(d), 0);
    std::vector<int> img(static_cast<std::size_t>(n.order), -1);
    auto element_of = [&](const std::vector<int>& c) {
        int x = 0;
        for (int i = 0; i < d; ++i) x = n.mul(x, n.pow(basis[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]));
        return x;
    };
    while (true) {
        std::vector<int> out(static_cast<std::size_t>(d), 0);
        for (int i = 0; i < d; ++i) {
            long long acc = 0;
            for (int j = 0; j < d; ++j)
                acc += static_cast<long long>(mat[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                                                  static_cast<std::size_t>(j)]) *
                       coords[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = static_cast<int>(((acc % p) + p) % p);
        }
        img[static_cast<std::size_t>(element_of(coords))] = element_of(out);
        int i = 0;
        for (; i < d; ++i) {
            if (++coords[static_cast<std::size_t>(i)] < p) break;
            coords[static_cast<std::size_t>(i)] = 0;
        }
        if (i == d) break;
    }
    return Perm(std::vector<int>(img.begin(), img.end()));
}

GroupTable cyclic_semidirect(const std::string& name, int n_order, int k_order, long long k_mult,
                             const GroupCaps& caps) {
    GroupTable n = cyclic_group(n_order);
    GroupTable k = cyclic_group(k_order);
    ActionSpec spec;
    spec.acting = &k;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {power_map(n_order, k_mult)};
    return semidirect_product(spec, name, caps);
}

int find_perm_element(const GroupTable& g, const Perm& p) {
    for (int i = 0; i < g.order; ++i)
        if (g.perms[static_cast<std::size_t>(i)] == p) return i;
    throw Error(ErrorCode::Internal, "element not found");
}

GroupTable build_sl23(const GroupCaps& caps) {
    GroupTable q8 = dicyclic_group(2, "Q8");
    // generators a (index 2) and b (index 1); the order-3 automorphism maps
    // a -> b -> ab
    int a = 2, b = 1;
    int ab = q8.mul(a, b);
    Perm sigma = automorphism_from_generator_images(q8, {a, b}, {b, ab});
    GroupTable c3 = cyclic_group(3);
    ActionSpec spec;
    spec.acting = &c3;
    spec.target = &q8;
    spec.generator_elements = {1};
    spec.images = {sigma};
    return semidirect_product(spec, "SL23", caps);
}

GroupTable build_q8_on_c3sq(const GroupCaps& caps) {
    GroupTable n = perm_group("C3xC3.base", 6, {"(1 2 3)", "(4 5 6)"}, caps);
    int e1 = find_perm_element(n, cycle("(1 2 3)", 6));
    int e2 = find_perm_element(n, cycle("(4 5 6)", 6));
    GroupTable q8 = dicyclic_group(2, "Q8");
    ActionSpec spec;
    spec.acting = &q8;
    spec.target = &n;
    spec.generator_elements = {2, 1};  // a, b
    spec.images = {matrix_action_perm(n, {e1, e2}, 3, {0, 2, 1, 0}),
                   matrix_action_perm(n, {e1, e2}, 3, {1, 1, 1, 2})};
    return semidirect_product(spec, "Q8_on_C3sq", caps);
}

GroupTable build_l9example(const GroupCaps& caps) {
    GroupTable n = perm_group("C7xC7.base", 14, {"(1 2 3 4 5 6 7)", "(8 9 10 11 12 13 14)"}, caps);
    int e1 = find_perm_element(n, cycle("(1 2 3 4 5 6 7)", 14));
    int e2 = find_perm_element(n, cycle("(8 9 10 11 12 13 14)", 14));
    GroupTable c3 = cyclic_group(3);
    ActionSpec spec;
    spec.acting = &c3;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {matrix_action_perm(n, {e1, e2}, 7, {2, 0, 0, 1})};
    return semidirect_product(spec, "L9example_7_3", caps);
}

GroupTable build_c2cube_by_c7(const GroupCaps& caps) {
    GroupTable n = perm_group("C2cube.base", 6, {"(1 2)", "(3 4)", "(5 6)"}, caps);
    int e1 = find_perm_element(n, cycle("(1 2)", 6));
    int e2 = find_perm_element(n, cycle("(3 4)", 6));
    int e3 = find_perm_element(n, cycle("(5 6)", 6));
    GroupTable c7 = cyclic_group(7);
    ActionSpec spec;
    spec.acting = &c7;
    spec.target = &n;
    spec.generator_elements = {1};
    // multiplication by a root of x^3 + x + 1 over F2
    spec.images = {matrix_action_perm(n, {e1, e2, e3}, 2, {0, 0, 1, 1, 0, 1, 0, 1, 0})};
    return semidirect_product(spec, "C2cube_by_C7", caps);
}

GroupTable build_c2four_by_c7(const GroupCaps& caps) {
    GroupTable n = perm_group("C2four.base", 8, {"(1 2)", "(3 4)", "(5 6)", "(7 8)"}, caps);
    int e1 = find_perm_element(n, cycle("(1 2)", 8));
    int e2 = find_perm_element(n, cycle("(3 4)", 8));
    int e3 = find_perm_element(n, cycle("(5 6)", 8));
    int e4 = find_perm_element(n, cycle("(7 8)", 8));
    GroupTable c7 = cyclic_group(7);
    ActionSpec spec;
    spec.acting = &c7;
    spec.target = &n;
    spec.generator_elements = {1};
    // fixes the first coordinate, rotates the F8 part
    spec.images = {matrix_action_perm(
        n, {e1, e2, e3, e4}, 2,
        {1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0})};
    return semidirect_product(spec, "C2four_by_C7", caps);
}

// C3 acting irreducibly on the square part and faithfully on the order-7
// part: the two centralizers inside the acting group coincide (both trivial).
GroupTable build_c2sq_x_c7_by_c3(const GroupCaps& caps) {
    GroupTable n = perm_group("C2sqxC7.base", 11, {"(1 2)", "(3 4)", "(5 6 7 8 9 10 11)"}, caps);
    int e1 = find_perm_element(n, cycle("(1 2)", 11));
    int e2 = find_perm_element(n, cycle("(3 4)", 11));
    int e3 = find_perm_element(n, cycle("(5 6 7 8 9 10 11)", 11));
    std::vector<int> img(static_cast<std::size_t>(n.order));
    for (int u1 = 0; u1 < 2; ++u1)
        for (int u2 = 0; u2 < 2; ++u2)
            for (int w = 0; w < 7; ++w) {
                int x = n.mul(n.mul(n.pow(e1, u1), n.pow(e2, u2)), n.pow(e3, w));
                int y = n.mul(n.mul(n.pow(e1, u2), n.pow(e2, (u1 + u2) % 2)),
                              n.pow(e3, 2 * w % 7));
                img[static_cast<std::size_t>(x)] = y;
            }
    GroupTable c3 = cyclic_group(3);
    ActionSpec spec;
    spec.acting = &c3;
    spec.target = &n;
    spec.generator_elements = {1};
    spec.images = {Perm(img)};
    return semidirect_product(spec, "C2sqxC7_by_C3", caps);
}

GroupTable build_c5_by_dic3(const GroupCaps& caps) {
    GroupTable n = cyclic_group(5);
    GroupTable dic3 = dicyclic_group(3, "Dic3");
    ActionSpec spec;
    spec.acting = &dic3;
    spec.target = &n;
    spec.generator_elements = {2, 1};  // a, b
    spec.images = {power_map(5, 4), power_map(5, 2)};
    return semidirect_product(spec, "C5_by_Dic3", caps);
}

GroupTable build_mod16(const GroupCaps& caps) {
    return cyclic_semidirect("Mod16", 8, 2, 5, caps);
}

struct Builder {
    std::string recipe;
    std::function<GroupTable(const GroupCaps&)> make;
};

const std::map<std::string, Builder>& builders() {
    static const std::map<std::string, Builder> b = [] {
        std::map<std::string, Builder> m;
        for (int n = 1; n <= 24; ++n) {
            std::string id = "C" + std::to_string(n);
            m.emplace(id, Builder{"cyclic " + std::to_string(n), [n, id](const GroupCaps& caps) {
                                      GroupTable g = cyclic_group(n, id);
                                      (void)caps;
                                      return g;
                                  }});
        }
        auto add_perm = [&m](const std::string& id, int degree, std::vector<std::string> gens) {
            std::string recipe = "perm degree " + std::to_string(degree);
            for (const auto& gline : gens) recipe += " " + gline;
            m.emplace(id, Builder{recipe, [id, degree, gens](const GroupCaps& caps) {
                                      return perm_group(id, degree, gens, caps);
                                  }});
        };
        add_perm("C2xC2", 4, {"(1 2)", "(3 4)"});
        add_perm("C2xC2xC2", 6, {"(1 2)", "(3 4)", "(5 6)"});
        add_perm("C3xC3", 6, {"(1 2 3)", "(4 5 6)"});
        add_perm("C5xC5", 10, {"(1 2 3 4 5)", "(6 7 8 9 10)"});
        add_perm("C4xC2", 6, {"(1 2 3 4)", "(5 6)"});
        add_perm("D8", 4, {"(1 2 3 4)", "(1 3)"});
        add_perm("D10", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"});
        add_perm("D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"});
        add_perm("D16", 8, {"(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"});
        add_perm("S3", 3, {"(1 2 3)", "(1 2)"});
        add_perm("A4", 4, {"(1 2 3)", "(1 2)(3 4)"});
        add_perm("S4", 4, {"(1 2 3 4)", "(1 2)"});
        add_perm("A5", 5, {"(1 2 3 4 5)", "(1 2 3)"});

        m.emplace("Q8", Builder{"dicyclic 2", [](const GroupCaps&) { return dicyclic_group(2, "Q8"); }});
        m.emplace("Q16", Builder{"dicyclic 4", [](const GroupCaps&) { return dicyclic_group(4, "Q16"); }});
        m.emplace("Dic3", Builder{"dicyclic 3", [](const GroupCaps&) { return dicyclic_group(3, "Dic3"); }});
        m.emplace("Mod16", Builder{"C8 by C2, generator to fifth power", build_mod16});
        m.emplace("F20", Builder{"C5 by C4, generator to square", [](const GroupCaps& caps) {
                                     return cyclic_semidirect("F20", 5, 4, 2, caps);
                                 }});
        m.emplace("F21", Builder{"C7 by C3, generator to square", [](const GroupCaps& caps) {
                                     return cyclic_semidirect("F21", 7, 3, 2, caps);
                                 }});
        m.emplace("C19xC27_batten",
                  Builder{"C19 by C27, generator to seventh power", [](const GroupCaps& caps) {
                              return cyclic_semidirect("C19xC27_batten", 19, 27, 7, caps);
                          }});
        m.emplace("SL23", Builder{"Q8 by C3 cycling the quaternion units", build_sl23});
        m.emplace("Q8_on_C3sq", Builder{"C3^2 by Q8, faithful", build_q8_on_c3sq});
        m.emplace("L9example_7_3", Builder{"C7^2 by C3 on one factor", build_l9example});
        m.emplace("C2cube_by_C7", Builder{"C2^3 by C7, field multiplication", build_c2cube_by_c7});
        m.emplace("C2four_by_C7",
                  Builder{"C2 x C2^3 by C7, fixed line plus field multiplication",
                          build_c2four_by_c7});
        m.emplace("C5_by_Dic3", Builder{"C5 by Dic3, kernel C3", build_c5_by_dic3});
        m.emplace("C2sqxC7_by_C3",
                  Builder{"C2^2 x C7 by C3, faithful on both parts", build_c2sq_x_c7_by_c3});

        auto add_product = [&m](const std::string& id, const std::string& a, const std::string& b) {
            m.emplace(id, Builder{"direct " + a + " x " + b, [a, b, id](const GroupCaps& caps) {
                                      GroupTable ga = builders().at(a).make(caps);
                                      GroupTable gb = builders().at(b).make(caps);
                                      GroupTable g = direct_product(ga, gb, caps);
                                      g.name = id;
                                      return g;
                                  }});
        };
        add_product("D8xC3", "D8", "C3");
        add_product("Q8xC3", "Q8", "C3");
        add_product("A4xC5", "A4", "C5");
        add_product("D12xC5", "D12", "C5");
        add_product("F21xC2", "F21", "C2");
        add_product("C19xC27_batten_xC2", "C19xC27_batten", "C2");
        return m;
    }();
    return b;
}

CorpusEntry entry(std::string id, long long order, std::vector<std::string> tags,
                  std::string fa = "", std::string fb = "") {
    CorpusEntry e;
    e.id = std::move(id);
    e.recipe = builders().at(e.id).recipe;
    e.expected_order = order;
    e.tags = std::move(tags);
    e.factor_a = std::move(fa);
    e.factor_b = std::move(fb);
    return e;
}

}  // namespace

const CorpusManifest& builtin_corpus() {
    static const CorpusManifest manifest = [] {
        CorpusManifest m;
        m.version = "corpus-v1";
        for (int n = 1; n <= 24; ++n) {
            std::vector<std::string> tags{"main"};
            long long pp2 = p_part(n, 2), pp3 = p_part(n, 3);
            if (pp2 == n && n > 1) tags.push_back("p2");
            if (pp3 == n && n > 1) tags.push_back("p3");
            m.entries.push_back(entry("C" + std::to_string(n), n, std::move(tags)));
        }
        m.entries.push_back(entry("C2xC2", 4, {"main", "p2"}));
        m.entries.push_back(entry("C2xC2xC2", 8, {"main", "p2"}));
        m.entries.push_back(entry("C3xC3", 9, {"main", "p3"}));
        m.entries.push_back(entry("C5xC5", 25, {"main"}));
        m.entries.push_back(entry("C4xC2", 8, {"main", "p2"}));
        m.entries.push_back(entry("D8", 8, {"main", "p2", "witness"}));
        m.entries.push_back(entry("Q8", 8, {"main", "p2"}));
        m.entries.push_back(entry("D16", 16, {"main", "p2"}));
        m.entries.push_back(entry("Q16", 16, {"main", "p2"}));
        m.entries.push_back(entry("Mod16", 16, {"main", "p2"}));
        m.entries.push_back(entry("D10", 10, {"main"}));
        m.entries.push_back(entry("D12", 12, {"main", "witness"}));
        m.entries.push_back(entry("Dic3", 12, {"main", "batten"}));
        m.entries.push_back(entry("S3", 6, {"main"}));
        m.entries.push_back(entry("A4", 12, {"main"}));
        m.entries.push_back(entry("S4", 24, {"main", "witness"}));
        m.entries.push_back(entry("A5", 60, {"main", "witness"}));
        m.entries.push_back(entry("F20", 20, {"main"}));
        m.entries.push_back(entry("F21", 21, {"main"}));
        m.entries.push_back(entry("SL23", 24, {"main", "avoid_hamil"}));
        m.entries.push_back(entry("Q8_on_C3sq", 72, {"main", "avoid_q8"}));
        m.entries.push_back(entry("L9example_7_3", 147, {"main", "witness"}));
        m.entries.push_back(entry("C19xC27_batten", 513, {"main", "batten"}));
        m.entries.push_back(entry("C2cube_by_C7", 56, {"main", "avoid_std"}));
        m.entries.push_back(entry("C2four_by_C7", 112, {"main", "avoid_cent"}));
        m.entries.push_back(entry("C5_by_Dic3", 60, {"main", "batten", "avoid_cy"}));
        m.entries.push_back(entry("C2sqxC7_by_C3", 84, {"main", "witness", "separation"}));
        m.entries.push_back(entry("D8xC3", 24, {"main", "coprime"}, "D8", "C3"));
        m.entries.push_back(entry("Q8xC3", 24, {"main", "coprime"}, "Q8", "C3"));
        m.entries.push_back(entry("A4xC5", 60, {"main", "coprime"}, "A4", "C5"));
        m.entries.push_back(entry("D12xC5", 60, {"main", "coprime"}, "D12", "C5"));
        m.entries.push_back(entry("F21xC2", 42, {"main", "coprime"}, "F21", "C2"));
        m.entries.push_back(
            entry("C19xC27_batten_xC2", 1026, {"main", "coprime", "batten"}, "C19xC27_batten", "C2"));
        return m;
    }();
    return manifest;
}

bool is_builtin(const std::string& id) { return builders().count(id) > 0; }

GroupTable build_builtin(const std::string& id, const GroupCaps& caps) {
    auto it = builders().find(id);
    if (it == builders().end())
        throw Error(ErrorCode::UnknownId, "unknown builtin group '" + id + "'");
    GroupTable g = it->second.make(caps);
    if (g.order > caps.max_order)
        throw Error(ErrorCode::ClosureTooLarge, "builtin '" + id + "' exceeds the order cap " +
                                                    std::to_string(caps.max_order));
    g.name = id;
    return g;
}

const std::string& builtin_model_text() {
    static const std::string text =
        "group surplus_example\n"
        "model 2\n"
        "block H 19 2\n"
        "18 0\n"
        "0 18\n"
        "4 0\n"
        "0 4\n"
        "block J 5 2\n"
        "0 3\n"
        "1 0\n"
        "2 3\n"
        "1 2\n";
    return text;
}

// --- lattice cache ---------------------------------------------------------

namespace {

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string serialize_lattice(const SubgroupLattice& l) {
    std::ostringstream out;
    out << "latcache v1 " << hash_hex(l.group.content_hash) << " " << l.group.order << " "
        << l.size() << "\n";
    for (const auto& n : l.nodes) {
        out << "node " << n.order();
        for (Elt m : n.members) out << ' ' << m;
        out << "\n";
    }
    out << "pairs\n";
    for (int a = 0; a < l.size(); ++a)
        for (int b = a; b < l.size(); ++b)
            out << a << ' ' << b << ' ' << l.meet(a, b) << ' ' << l.join(a, b) << "\n";
    out << "end\n";
    return out.str();
}

std::shared_ptr<const SubgroupLattice> deserialize_lattice(const std::string& text,
                                                           const GroupTable& g) {
    auto lines = split_lines(text);
    if (lines.empty()) throw Error(ErrorCode::CacheCorrupt, "empty cache file");
    std::istringstream head(lines[0]);
    std::string magic, version, hash;
    int order = 0, count = 0;
    if (!(head >> magic >> version >> hash >> order >> count) || magic != "latcache" ||
        version != "v1")
        throw Error(ErrorCode::CacheCorrupt, "bad cache header");
    if (hash != hash_hex(g.content_hash) || order != g.order)
        throw Error(ErrorCode::CacheCorrupt, "cache content does not match the group");
    std::vector<std::vector<Elt>> members;
    std::size_t i = 1;
    for (; i < lines.size(); ++i) {
        if (lines[i] == "pairs") break;
        std::istringstream in(lines[i]);
        std::string word;
        int node_order;
        if (!(in >> word >> node_order) || word != "node")
            throw Error(ErrorCode::CacheCorrupt, "bad node line");
        std::vector<Elt> ms;
        int v;
        while (in >> v) {
            if (v < 0 || v >= g.order) throw Error(ErrorCode::CacheCorrupt, "member out of range");
            ms.push_back(static_cast<Elt>(v));
        }
        if (static_cast<int>(ms.size()) != node_order)
            throw Error(ErrorCode::CacheCorrupt, "node order mismatch");
        members.push_back(std::move(ms));
    }
    if (static_cast<int>(members.size()) != count)
        throw Error(ErrorCode::CacheCorrupt, "node count mismatch");
    if (i >= lines.size()) throw Error(ErrorCode::CacheCorrupt, "missing pair section");
    auto lat = lattice_from_parts(g, std::move(members));
    // stored meet/join tables double as a checksum
    for (++i; i < lines.size(); ++i) {
        if (lines[i] == "end") return lat;
        std::istringstream in(lines[i]);
        int a, b, mm, jj;
        if (!(in >> a >> b >> mm >> jj)) throw Error(ErrorCode::CacheCorrupt, "bad pair line");
        if (a < 0 || b < 0 || a >= lat->size() || b >= lat->size())
            throw Error(ErrorCode::CacheCorrupt, "pair index out of range");
        if (lat->meet(a, b) != mm || lat->join(a, b) != jj)
            throw Error(ErrorCode::CacheCorrupt, "stored meet/join disagrees with rebuild");
    }
    throw Error(ErrorCode::CacheCorrupt, "missing end marker");
}

}  // namespace

std::string resolve_cache_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("LATSIEVE_CACHE"); env && *env) return env;
    return ".latsieve-cache";
}

std::string cache_file_path(const std::string& store_dir, const GroupTable& g) {
    return store_dir + "/" + hash_hex(g.content_hash) + ".latcache";
}

std::shared_ptr<const SubgroupLattice> lattice_cache(const std::string& store_dir,
                                                     const GroupTable& g, const LatticeCaps& caps) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(store_dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create cache directory " + store_dir);

    const std::string path = cache_file_path(store_dir, g);
    if (fs::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            return deserialize_lattice(buf.str(), g);
        } catch (const Error& e) {
            if (e.code != ErrorCode::CacheCorrupt) throw;
            // fall through to rebuild
        }
    }
    auto lat = build_lattice(g, caps);
    // write-temp-then-rename keeps concurrent readers safe; concurrent writers
    // race to identical content
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write cache file " + tmp);
        out << serialize_lattice(*lat);
    }
    fs::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot move cache file into place");
    return lat;
}

}  // namespace latsieve
