#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ann {

// 1-based line/column; offset and length are byte counts into the file text.
struct SourceSpan {
    std::string file;
    int line = 1;
    int column = 1;
    int length = 0;
    std::size_t offset = 0;
};

enum class TargetKind : std::uint8_t { Class, Interface, Enum, Field, Method, Constructor };
enum class Modifier : std::uint8_t { Public, Protected, Private, Static, Final, Abstract };

constexpr std::array<TargetKind, 6> all_target_kinds{TargetKind::Class, TargetKind::Interface,
                                                     TargetKind::Enum, TargetKind::Field,
                                                     TargetKind::Method, TargetKind::Constructor};
constexpr std::array<Modifier, 6> all_modifiers{Modifier::Public, Modifier::Protected,
                                                Modifier::Private, Modifier::Static,
                                                Modifier::Final, Modifier::Abstract};

std::string_view target_kind_keyword(TargetKind kind);
std::string_view modifier_keyword(Modifier mod);

// class/interface/enum are type kinds; field/method/constructor are member kinds.
inline bool is_type_kind(TargetKind kind) {
    return kind == TargetKind::Class || kind == TargetKind::Interface || kind == TargetKind::Enum;
}
inline bool is_member_kind(TargetKind kind) { return !is_type_kind(kind); }

inline bool is_access_modifier(Modifier mod) {
    return mod == Modifier::Public || mod == Modifier::Protected || mod == Modifier::Private;
}

class ModifierSet {
public:
    constexpr ModifierSet() = default;
    constexpr ModifierSet(std::initializer_list<Modifier> mods) {
        for (Modifier m : mods) insert(m);
    }

    constexpr bool contains(Modifier m) const { return (mask_ & bit(m)) != 0; }
    constexpr void insert(Modifier m) { mask_ |= bit(m); }
    constexpr void erase(Modifier m) { mask_ &= ~bit(m); }
    constexpr bool subset_of(const ModifierSet& other) const {
        return (mask_ & ~other.mask_) == 0;
    }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }

    friend constexpr bool operator==(ModifierSet a, ModifierSet b) = default;

private:
    static constexpr std::uint8_t bit(Modifier m) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(m));
    }
    std::uint8_t mask_ = 0;
};

class TargetKindSet {
public:
    constexpr TargetKindSet() = default;
    constexpr TargetKindSet(std::initializer_list<TargetKind> kinds) {
        for (TargetKind k : kinds) insert(k);
    }
    static constexpr TargetKindSet all() {
        TargetKindSet s;
        for (TargetKind k : all_target_kinds) s.insert(k);
        return s;
    }

    constexpr bool contains(TargetKind k) const { return (mask_ & bit(k)) != 0; }
    constexpr void insert(TargetKind k) { mask_ |= bit(k); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }

    friend constexpr bool operator==(TargetKindSet a, TargetKindSet b) = default;

private:
    static constexpr std::uint8_t bit(TargetKind k) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
    }
    std::uint8_t mask_ = 0;
};

enum class AttrType : std::uint8_t { String, Int, Float, Boolean, Class };

std::string_view attr_type_keyword(AttrType type);

struct Literal {
    enum class Kind : std::uint8_t { String, Int, Float, Bool };
    Kind kind = Kind::Int;
    // For String: the decoded value. For the others: the exact source spelling,
    // preserved so codegen and the printer never reformat numbers.
    std::string text;
    SourceSpan span;
};

struct Statement {
    std::optional<std::string> annotation_ref;  // name without the leading '@'
    ModifierSet modifiers;                      // at most one access modifier
    TargetKind kind = TargetKind::Class;
    SourceSpan span;
};

struct Constraint {
    enum class Polarity : std::uint8_t { Require, Forbid };
    Polarity polarity = Polarity::Require;
    std::optional<TargetKind> scope;  // absent = applies to the annotated element itself
    bool all_quantifier = false;      // only valid on scoped Requires
    // Require statements are or-joined, Forbid statements and-joined; the
    // connective is implied by the polarity and not stored.
    std::vector<Statement> statements;
    SourceSpan span;
};

struct AttributeDecl {
    std::string name;
    AttrType type = AttrType::String;
    std::optional<Literal> default_value;
    SourceSpan span;
};

struct AnnotationDecl {
    std::string name;
    bool runtime = false;
    std::vector<AttributeDecl> attributes;
    std::vector<Constraint> constraints;
    SourceSpan span;
};

struct AnnotationUnit {
    std::string package_name;  // dotted path, may be empty
    std::vector<AnnotationDecl> declarations;
    std::string source_name;
};

// Union of statement kinds over the unscoped Require constraints; a declaration
// with no unscoped Require applies to every kind.
TargetKindSet derive_target_kinds(const AnnotationDecl& decl);

// Maps kinds to java.lang.annotation.ElementType names, deduplicated, in the
// fixed order TYPE, FIELD, METHOD, CONSTRUCTOR.
std::vector<std::string> java_element_types(const TargetKindSet& kinds);

// Structural equality, ignoring source spans. Used by the round-trip tests.
bool same_structure(const Literal& a, const Literal& b);
bool same_structure(const Statement& a, const Statement& b);
bool same_structure(const Constraint& a, const Constraint& b);
bool same_structure(const AttributeDecl& a, const AttributeDecl& b);
bool same_structure(const AnnotationDecl& a, const AnnotationDecl& b);
bool same_structure(const AnnotationUnit& a, const AnnotationUnit& b);

}  // namespace ann
