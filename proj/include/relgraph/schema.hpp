#pragma once

#include <fstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "relgraph/util.hpp"

namespace relgraph {

enum class SemanticType { primary_key, foreign_key, numeric, categorical, text, timestamp };

inline const char* to_string(SemanticType t) {
    switch (t) {
        case SemanticType::primary_key: return "primary_key";
        case SemanticType::foreign_key: return "foreign_key";
        case SemanticType::numeric: return "numeric";
        case SemanticType::categorical: return "categorical";
        case SemanticType::text: return "text";
        case SemanticType::timestamp: return "timestamp";
    }
    return "?";
}

inline SemanticType semantic_type_from_string(const std::string& s) {
    if (s == "primary_key") return SemanticType::primary_key;
    if (s == "foreign_key") return SemanticType::foreign_key;
    if (s == "numeric") return SemanticType::numeric;
    if (s == "categorical") return SemanticType::categorical;
    if (s == "text") return SemanticType::text;
    if (s == "timestamp") return SemanticType::timestamp;
    fail("unknown semantic type: \"" + s + "\"");
}

struct ColumnSpec {
    std::string name;
    SemanticType type = SemanticType::text;
    std::string target;  // foreign_key only: referenced table
    bool nullable = false;
};

struct TableSpec {
    std::string name;
    std::string file;  // CSV file name, relative to the database directory
    std::string time_column;  // empty = static table
    std::vector<ColumnSpec> columns;

    int column_index(const std::string& col) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i].name == col) return static_cast<int>(i);
        return -1;
    }
    int primary_key_index() const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i].type == SemanticType::primary_key) return static_cast<int>(i);
        return -1;
    }
};

struct SchemaManifest {
    std::vector<TableSpec> tables;  // declaration order is the canonical type order
    std::string path;

    int table_index(const std::string& name) const {
        for (std::size_t i = 0; i < tables.size(); ++i)
            if (tables[i].name == name) return static_cast<int>(i);
        return -1;
    }
    const TableSpec& table(const std::string& name) const {
        const int i = table_index(name);
        require(i >= 0, "manifest has no table named \"" + name + "\"");
        return tables[static_cast<std::size_t>(i)];
    }
};

// Manifest format (UTF-8 JSON):
// {"tables":[{"name":..., "file":..., "time_column":...|null,
//             "columns":[{"name":..., "type":..., "target":..., "nullable":...}]}]}
inline SchemaManifest parse_manifest(const nlohmann::json& j, const std::string& where) {
    SchemaManifest m;
    m.path = where;
    require(j.is_object() && j.contains("tables") && j["tables"].is_array(),
            where + ": manifest must be an object with a \"tables\" array");
    std::unordered_set<std::string> table_names;
    for (const auto& jt : j["tables"]) {
        TableSpec t;
        require(jt.contains("name") && jt["name"].is_string(),
                where + ": table entry missing \"name\"");
        t.name = jt["name"].get<std::string>();
        require(table_names.insert(t.name).second,
                where + ": duplicate table name \"" + t.name + "\"");
        t.file = jt.value("file", t.name + ".csv");
        if (jt.contains("time_column") && !jt["time_column"].is_null())
            t.time_column = jt["time_column"].get<std::string>();
        require(jt.contains("columns") && jt["columns"].is_array(),
                where + ": table \"" + t.name + "\" missing \"columns\"");
        std::unordered_set<std::string> col_names;
        int pkeys = 0;
        for (const auto& jc : jt["columns"]) {
            ColumnSpec c;
            require(jc.contains("name") && jc["name"].is_string(),
                    where + ": column in \"" + t.name + "\" missing \"name\"");
            c.name = jc["name"].get<std::string>();
            require(col_names.insert(c.name).second,
                    where + ": duplicate column \"" + c.name + "\" in table \"" + t.name + "\"");
            require(jc.contains("type") && jc["type"].is_string(),
                    where + ": column \"" + t.name + "." + c.name + "\" missing \"type\"");
            try {
                c.type = semantic_type_from_string(jc["type"].get<std::string>());
            } catch (const Error& e) {
                fail(where + ": column \"" + t.name + "." + c.name + "\": " + e.what());
            }
            c.nullable = jc.value("nullable", false);
            if (c.type == SemanticType::foreign_key) {
                require(jc.contains("target") && jc["target"].is_string(),
                        where + ": fkey column \"" + t.name + "." + c.name +
                            "\" missing \"target\"");
                c.target = jc["target"].get<std::string>();
            }
            if (c.type == SemanticType::primary_key) {
                require(!c.nullable, where + ": primary key \"" + t.name + "." + c.name +
                                         "\" cannot be nullable");
                ++pkeys;
            }
            t.columns.push_back(std::move(c));
        }
        require(pkeys == 1, where + ": table \"" + t.name + "\" must have exactly one "
                            "primary_key column, found " + std::to_string(pkeys));
        if (!t.time_column.empty()) {
            const int ti = t.column_index(t.time_column);
            require(ti >= 0, where + ": time_column \"" + t.time_column +
                                 "\" not declared in table \"" + t.name + "\"");
            require(t.columns[static_cast<std::size_t>(ti)].type == SemanticType::timestamp,
                    where + ": time_column \"" + t.name + "." + t.time_column +
                        "\" must have type timestamp");
        }
        m.tables.push_back(std::move(t));
    }
    // fkey targets must exist
    for (const auto& t : m.tables)
        for (const auto& c : t.columns)
            if (c.type == SemanticType::foreign_key)
                require(m.table_index(c.target) >= 0,
                        where + ": unknown fkey target \"" + c.target + "\" referenced by \"" +
                            t.name + "." + c.name + "\"");
    return m;
}

inline SchemaManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open manifest: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(path + ": manifest parse error: " + e.what());
    }
    return parse_manifest(j, path);
}

inline nlohmann::json manifest_to_json(const SchemaManifest& m) {
    nlohmann::json jt = nlohmann::json::array();
    for (const auto& t : m.tables) {
        nlohmann::json jc = nlohmann::json::array();
        for (const auto& c : t.columns) {
            nlohmann::json col{{"name", c.name}, {"type", to_string(c.type)},
                               {"nullable", c.nullable}};
            if (c.type == SemanticType::foreign_key) col["target"] = c.target;
            jc.push_back(std::move(col));
        }
        nlohmann::json tbl{{"name", t.name}, {"file", t.file}, {"columns", std::move(jc)}};
        tbl["time_column"] = t.time_column.empty() ? nlohmann::json() : nlohmann::json(t.time_column);
        jt.push_back(std::move(tbl));
    }
    return nlohmann::json{{"tables", std::move(jt)}};
}

}  // namespace relgraph
