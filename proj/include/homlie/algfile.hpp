#pragma once

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "homlie/deform.hpp"
#include "homlie/parse.hpp"

namespace homlie {

/// Validated on-disk algebra/deformation description. Indices in the file
/// are 1-based; bracket entries are given only for i < j.
struct AlgebraFile {
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<std::string> params;  // registry order
    int truncation = 0;
    Registry reg;
    std::shared_ptr<Deformation> def;
};

namespace detail {

inline MultiPoly parse_field(const std::string& expr, const RegistryView& reg,
                             const std::string& where) {
    try {
        return parse_poly(expr, reg);
    } catch (const ParseError& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace detail

inline AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": invalid JSON: " + e.what());
    }

    AlgebraFile f;
    try {
        f.dim = j.at("dim").get<int>();
        f.basis = j.at("basis").get<std::vector<std::string>>();
        f.params = j.at("params").get<std::vector<std::string>>();
        f.truncation = j.at("truncation").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": schema violation: " + e.what());
    }
    if (f.dim < 1) throw InputError(path + ": dim must be >= 1");
    if (static_cast<int>(f.basis.size()) != f.dim)
        throw InputError(path + ": basis size does not match dim");
    if (f.truncation < 1) throw InputError(path + ": truncation must be >= 1");

    f.reg = std::make_shared<ParamRegistry>();
    for (const auto& name : f.params) {
        if (f.reg->find(name)) throw InputError(path + ": duplicate parameter: " + name);
        f.reg->intern(name);
    }

    Basis basis{f.basis};
    std::vector<BracketConstants> brackets;
    std::vector<LinMap> maps;

    try {
        std::set<int> seen_orders;
        for (const auto& jb : j.at("brackets")) {
            int order = jb.at("order").get<int>();
            if (order < 0 || order >= f.truncation)
                throw InputError(path + ": bracket order out of range: " + std::to_string(order));
            if (!seen_orders.insert(order).second)
                throw InputError(path + ": duplicate bracket order: " + std::to_string(order));
            while (static_cast<int>(brackets.size()) <= order)
                brackets.emplace_back(f.reg, f.dim);
            BracketConstants& c = brackets[static_cast<std::size_t>(order)];
            std::set<std::pair<int, int>> seen_entries;
            for (const auto& je : jb.at("entries")) {
                if (!je.is_array() || je.size() != 3)
                    throw InputError(path + ": bracket entry must be [i, j, [expr...]]");
                int i = je.at(0).get<int>();
                int jj = je.at(1).get<int>();
                if (i < 1 || jj < 1 || i > f.dim || jj > f.dim)
                    throw InputError(path + ": bracket entry index out of range");
                if (i >= jj) throw InputError(path + ": lower-triangle entry; specify i < j");
                if (!seen_entries.insert({i, jj}).second)
                    throw InputError(path + ": duplicate bracket entry [" + std::to_string(i) +
                                     ", " + std::to_string(jj) + "]");
                auto exprs = je.at(2).get<std::vector<std::string>>();
                if (static_cast<int>(exprs.size()) != f.dim)
                    throw InputError(path + ": bracket entry needs one expression per basis vector");
                for (int k = 1; k <= f.dim; ++k)
                    c.set(i, jj, k,
                          detail::parse_field(exprs[static_cast<std::size_t>(k - 1)], f.reg,
                                              path + ": bracket order " + std::to_string(order)));
            }
        }
        if (brackets.empty()) throw InputError(path + ": at least the order-0 bracket is required");

        std::set<int> seen_map_orders;
        for (const auto& jm : j.at("maps")) {
            int order = jm.at("order").get<int>();
            if (order < 0 || order >= f.truncation)
                throw InputError(path + ": map order out of range: " + std::to_string(order));
            if (!seen_map_orders.insert(order).second)
                throw InputError(path + ": duplicate map order: " + std::to_string(order));
            while (static_cast<int>(maps.size()) <= order) maps.emplace_back(f.reg, f.dim);
            LinMap& m = maps[static_cast<std::size_t>(order)];
            auto matrix = jm.at("matrix").get<std::vector<std::vector<std::string>>>();
            if (static_cast<int>(matrix.size()) != f.dim)
                throw InputError(path + ": map matrix must have dim rows");
            for (int i = 1; i <= f.dim; ++i) {
                if (static_cast<int>(matrix[static_cast<std::size_t>(i - 1)].size()) != f.dim)
                    throw InputError(path + ": map matrix must have dim columns");
                for (int jj = 1; jj <= f.dim; ++jj)
                    m.set(i, jj,
                          detail::parse_field(
                              matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(jj - 1)],
                              f.reg, path + ": map order " + std::to_string(order)));
            }
        }
        if (maps.empty()) throw InputError(path + ": at least the order-0 map is required");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": schema violation: " + e.what());
    }

    f.def = std::make_shared<Deformation>(std::move(basis), std::move(brackets), std::move(maps),
                                          f.truncation);
    return f;
}

/// Serializes with canonical expressions; load(save(x)) reproduces the
/// deformation exactly.
inline nlohmann::json algebra_to_json(const Deformation& d,
                                      const std::vector<std::string>& params) {
    nlohmann::json j;
    j["dim"] = d.dim();
    j["basis"] = d.basis.names;
    j["params"] = params;
    j["truncation"] = d.truncation_order;
    j["brackets"] = nlohmann::json::array();
    for (std::size_t m = 0; m < d.brackets.size(); ++m) {
        nlohmann::json jb;
        jb["order"] = m;
        jb["entries"] = nlohmann::json::array();
        for (int i = 1; i <= d.dim(); ++i)
            for (int k = i + 1; k <= d.dim(); ++k) {
                Vec v = d.brackets[m].bracket_basis(i, k);
                if (v.is_zero()) continue;
                std::vector<std::string> exprs;
                for (const auto& c : v.coords) exprs.push_back(c.str());
                jb["entries"].push_back(nlohmann::json::array({i, k, exprs}));
            }
        j["brackets"].push_back(std::move(jb));
    }
    j["maps"] = nlohmann::json::array();
    for (std::size_t m = 0; m < d.maps.size(); ++m) {
        nlohmann::json jm;
        jm["order"] = m;
        std::vector<std::vector<std::string>> matrix;
        for (int i = 1; i <= d.dim(); ++i) {
            std::vector<std::string> row;
            for (int k = 1; k <= d.dim(); ++k) row.push_back(d.maps[m].entry(i, k).str());
            matrix.push_back(std::move(row));
        }
        jm["matrix"] = std::move(matrix);
        j["maps"].push_back(std::move(jm));
    }
    return j;
}

inline void save_algebra_file(const std::string& path, const Deformation& d,
                              const std::vector<std::string>& params) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << algebra_to_json(d, params).dump(2) << "\n";
}

}  // namespace homlie
