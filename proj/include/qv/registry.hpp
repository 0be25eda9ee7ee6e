#ifndef QV_REGISTRY_HPP
#define QV_REGISTRY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qv/bigreal.hpp"
#include "qv/params.hpp"
#include "qv/rational.hpp"

namespace qv {

enum class Side { Left, Right };
enum class Backend { Exact, ExactTail, Numeric };

const char* backend_name(Backend b);

struct ParamSpec {
    enum Kind { Int, IntVec, Rational, RationalVec, Real, TruncOrder } kind;
    std::string name;
    std::string note;
};

struct RegistryEntry {
    std::string id;      // catalog id, e.g. "TA1.8"
    std::string eq;      // display tag, e.g. "1.8"
    int section;         // source section the display lives in
    std::string title;   // short role description
    Backend backend;
    std::vector<ParamSpec> schema;
    std::string tolerance;      // numeric ids: default residual threshold
    bool has_printed_variant;   // a runnable pre-correction form exists
};

const std::vector<RegistryEntry>& registry();
const RegistryEntry& registry_entry(const std::string& id);
bool registry_has(const std::string& id);

/// Throws SchemaError when the instance does not carry exactly what the id's
/// schema requires.
void validate_instance(const IdentityInstance& inst);

/// Throws PoleError when a printed denominator of the id vanishes for these
/// parameters. Purely syntactic; exact arithmetic traps anything missed.
void pole_check(const IdentityInstance& inst);

/// Exact side value; tail is present for the tail-bounded ids (partial sum of
/// trunc_R + 1 leading terms on the left side, rigorous bound on the rest).
struct SideValue {
    ExactScalar value;
    std::optional<ExactScalar> tail;
};

/// Evaluate one side of an exact or tail-bounded identity over rationals.
/// `printed` selects the pre-errata form where one exists.
SideValue eval_side(const std::string& id, Side side, const IdentityInstance& inst,
                    bool printed = false);

/// Same evaluator instantiated over BigReal (backend-agreement reruns).
BigReal eval_side_real(const std::string& id, Side side, const IdentityInstance& inst,
                       long prec);

enum class Status { Pass, Fail, XFail, XPass, Error };
const char* status_name(Status s);

struct VerificationReport {
    std::string id;
    std::string kind = "identity"; // "identity" | "reduction" | "probe"
    Backend backend = Backend::Exact;
    std::vector<std::pair<std::string, std::string>> instance; // echo, ordered
    std::string lhs, rhs;
    std::optional<bool> equal;          // exact ids
    std::optional<std::string> residual; // numeric / tail ids
    std::optional<std::string> tail_bound;
    Status status = Status::Pass;
    std::string detail;                  // error text or xfail note
    std::vector<std::string> errata;     // errata keys this row relied on
    int64_t elapsed_us = 0;              // in-memory only; not part of the report body
};

struct VerifyOptions {
    bool strict_printed = false;
    long prec = 192;
    long K = 128;
};

VerificationReport verify(const IdentityInstance& inst, const VerifyOptions& opts = {});

/// Instance echo used in reports: deterministic ordering.
std::vector<std::pair<std::string, std::string>> echo_instance(const IdentityInstance& inst);

} // namespace qv

#endif
