#pragma once

// Mini-grammar for one-liner inputs: `name:key=val,key=val`. A bare token
// without '=' is kept as a flag (e.g. `perm:cycle,d=3,l=1`).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "loowit/states.hpp"
#include "loowit/witness.hpp"

namespace loowit {

struct BuiltinSpec {
    std::string name;
    std::map<std::string, std::string> values;
    std::set<std::string> flags;

    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    bool has(const std::string& key) const { return values.count(key) != 0; }
};

BuiltinSpec parse_builtin(std::string_view text);

/// States: horodecki:a=, family:d=,a1=,a2= | family:a=0.2/0.5/0.3,
/// werner:p=, phi:d=, product:d=,seed=, separable:d=,k=,seed=.
BipartiteState make_builtin_state(const BuiltinSpec& spec);

/// Witnesses: horodecki:a=, perm:cycle,d=,l= | perm:sigma=2/1/4/3 (1-based).
Witness make_builtin_witness(const BuiltinSpec& spec);

/// Reads {"matrix": [[...]]} or {"re": [[...]]} into a transform.
OrthTransform load_transform(const std::string& path);

}  // namespace loowit
