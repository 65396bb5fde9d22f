#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace epistact {

/// The four epistemic activities, in canonical order.
enum class Activity : std::uint8_t { HG = 0, EG = 1, EE = 2, DC = 3 };

inline constexpr std::array<Activity, 4> kActivities{
    Activity::HG, Activity::EG, Activity::EE, Activity::DC};

inline constexpr std::size_t kActivityCount = 4;

constexpr std::string_view to_string(Activity a)
{
    switch (a) {
    case Activity::HG: return "HG";
    case Activity::EG: return "EG";
    case Activity::EE: return "EE";
    case Activity::DC: return "DC";
    }
    return "?";
}

inline Activity parse_activity(std::string_view s)
{
    if (s == "HG") return Activity::HG;
    if (s == "EG") return Activity::EG;
    if (s == "EE") return Activity::EE;
    if (s == "DC") return Activity::DC;
    throw std::invalid_argument("unknown activity: " + std::string(s));
}

enum class BioTag : std::uint8_t { B = 0, I = 1, O = 2 };

constexpr char to_char(BioTag t)
{
    switch (t) {
    case BioTag::B: return 'B';
    case BioTag::I: return 'I';
    case BioTag::O: return 'O';
    }
    return '?';
}

inline BioTag parse_bio(char c)
{
    switch (c) {
    case 'B': return BioTag::B;
    case 'I': return BioTag::I;
    case 'O': return BioTag::O;
    }
    throw std::invalid_argument(std::string("unknown BIO tag: ") + c);
}

/// One element of the label alphabet C: either Outside or (B|I, activity).
struct Label {
    std::optional<std::pair<BioTag, Activity>> typed;  // empty = Outside

    static Label outside() { return Label{}; }
    static Label make(BioTag bio, Activity a)
    {
        if (bio == BioTag::O)
            throw std::invalid_argument("typed label cannot carry tag O");
        return Label{std::make_pair(bio, a)};
    }
    bool operator==(const Label&) const = default;
};

inline constexpr std::size_t kLabelUniverseSize = 9;  // |C| = 2*4 + 1

/// Dense index of a Label within C: Outside = 0, then (B,a) = 1+2i, (I,a) = 2+2i.
inline int label_index(const Label& l)
{
    if (!l.typed) return 0;
    auto [bio, a] = *l.typed;
    return 1 + 2 * static_cast<int>(a) + (bio == BioTag::I ? 1 : 0);
}

inline std::string to_string(const Label& l)
{
    if (!l.typed) return "O";
    auto [bio, a] = *l.typed;
    return std::string(1, to_char(bio)) + "-" + std::string(to_string(a));
}

/// Per-token multi-label state: a subset C' of C.
///
/// Stored as one BIO tag per activity; all-O means the single label Outside.
/// The representation enforces the LabelSet invariants by construction:
/// at most one typed label per activity, Outside exactly when no typed label
/// is present, never empty.
class LabelSet {
public:
    LabelSet() { tags_.fill(BioTag::O); }

    BioTag tag(Activity a) const { return tags_[static_cast<std::size_t>(a)]; }
    void set(Activity a, BioTag t) { tags_[static_cast<std::size_t>(a)] = t; }

    bool outside() const
    {
        for (BioTag t : tags_)
            if (t != BioTag::O) return false;
        return true;
    }

    /// Number of typed labels; the set's cardinality is max(this, 1).
    int typed_count() const
    {
        int n = 0;
        for (BioTag t : tags_)
            if (t != BioTag::O) ++n;
        return n;
    }

    bool contains(const Label& l) const
    {
        if (!l.typed) return outside();
        auto [bio, a] = *l.typed;
        return tag(a) == bio;
    }

    /// 4-bit mask over activities, canonical order; bit i set iff activity i
    /// carries B or I. The empty mask corresponds to label O.
    std::uint8_t activity_mask() const
    {
        std::uint8_t m = 0;
        for (std::size_t i = 0; i < kActivityCount; ++i)
            if (tags_[i] != BioTag::O) m |= static_cast<std::uint8_t>(1u << i);
        return m;
    }

    const std::array<BioTag, 4>& tags() const { return tags_; }

    bool operator==(const LabelSet&) const = default;

private:
    std::array<BioTag, 4> tags_;
};

/// Concat-transformation class: one BIO tag per activity, canonical order,
/// rendered "x-x-x-x".
struct ConcatLabel {
    std::array<BioTag, 4> tags{BioTag::O, BioTag::O, BioTag::O, BioTag::O};

    bool operator==(const ConcatLabel&) const = default;
    bool operator<(const ConcatLabel& o) const { return tags < o.tags; }
};

inline std::string to_string(const ConcatLabel& c)
{
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) s += '-';
        s += to_char(c.tags[i]);
    }
    return s;
}

inline ConcatLabel parse_concat(std::string_view s)
{
    if (s.size() != 7 || s[1] != '-' || s[3] != '-' || s[5] != '-')
        throw std::invalid_argument("malformed concat label: " + std::string(s));
    ConcatLabel c;
    for (std::size_t i = 0; i < 4; ++i) c.tags[i] = parse_bio(s[2 * i]);
    return c;
}

}  // namespace epistact
