#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "hyperhall/io.hpp"

namespace fixtures {

struct Fixture
{
    std::string path;
    hyperhall::HypergroupDocument doc;
    bool group = false; // came from a Cayley table
};

inline std::string path(const std::string& relative)
{
    return std::string(FIXTURE_DIR) + "/" + relative;
}

inline hyperhall::HypergroupDocument load(const std::string& relative)
{
    return hyperhall::parse_any(hyperhall::read_file(path(relative)));
}

inline hyperhall::FiniteHypergroup hypergroup(const std::string& relative)
{
    return load(relative).hypergroup;
}

/// Every fixture file, sorted by path. Cayley tables above `max_group_order` are skipped.
inline std::vector<Fixture> corpus(int max_group_order = 24)
{
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(FIXTURE_DIR))
        if (entry.is_regular_file())
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    std::vector<Fixture> out;
    for (const auto& f : files) {
        auto doc = hyperhall::parse_any(hyperhall::read_file(f));
        bool group = f.ends_with(".cayley");
        if (group && doc.hypergroup.rank() > max_group_order)
            continue;
        out.push_back({f, std::move(doc), group});
    }
    return out;
}

} // namespace fixtures
