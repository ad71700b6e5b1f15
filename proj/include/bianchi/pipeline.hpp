#pragma once

// Per-field verdicts, batch scans and table reproduction.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bianchi/classgroup.hpp"
#include "bianchi/isometry.hpp"
#include "bianchi/spinor.hpp"
#include "bianchi/vinberg.hpp"

namespace bianchi {

enum class Status { Reflective, QuasiReflective, NotReflective, Unknown };
const char* to_string(Status s);

struct GroupStatus {
    Status status = Status::Unknown;
    int rank = 0;          // quasi-reflective rank
    bool warning = false;  // filled configuration of unknown shape
    std::string note;

    friend bool operator==(const GroupStatus& a, const GroupStatus& b) {
        return a.status == b.status && a.rank == b.rank;
    }
};

struct Verdict {
    explicit Verdict(const FormSpec& f) : m(f.m), form(f), diagram(f) { roots.form = f; }

    std::int64_t m = 0;
    FormSpec form;
    GroupStatus hat;
    GroupStatus bi;
    RootSystem roots;
    CoxeterDiagram diagram;  // filled flags set
    std::size_t cusps = 0;
    std::optional<Certificate> certificate;
    ClassGroupStructure class_group;
    std::int64_t h2 = 1;
    double seconds = 0;
};

Verdict classify(std::int64_t m, const Budget& budget = {});

struct ScanResult {
    std::vector<Verdict> verdicts;  // ascending m
    std::vector<std::int64_t> skipped;
};

/// Non-square-free or nonpositive m are skipped. jobs = 0 means one per core.
ScanResult scan(std::vector<std::int64_t> ms, const Budget& budget = {}, unsigned jobs = 1);

struct TableReport {
    std::string which;
    bool pass = false;
    std::string text;
};

const std::vector<std::string>& table_ids();

/// Throws std::invalid_argument for an unknown id.
TableReport reproduce_table(std::string_view which);

}  // namespace bianchi
