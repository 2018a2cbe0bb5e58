"""
维数账本的推理规则
每条规则有固定的引用文字和类别，账本行的 trace 只能引用这里的规则
"""

from typing import FrozenSet

from glom import glom

# kind: local 计入局部维数, global 计入整体上界, h2 为 H^2 消失链, carry 为上一层的结转
RULES = {
    "local_base": {
        "kind": "local",
        "citation": "局部基点: dim H^1_f(Γ_p, W_2) = dim H^1_f(Γ_p, U_2) = 2",
    },
    "hodge_negative": {
        "kind": "local",
        "citation": "Hodge 过滤严格为负: n>=3 时 H^1_f(Γ_p, gr_n) = H^1(Γ_p, gr_n)",
    },
    "local_surjective": {
        "kind": "local",
        "citation": "局部 H^2(Γ_p, gr_n) = 0: H^1_f(Γ_p, W_n) -> H^1_f(Γ_p, W_{n-1}) 满射 (n>=3)",
    },
    "local_euler": {
        "kind": "local",
        "citation": "局部 Euler 示性数: H^0 = H^2 = 0, dim H^1(Γ_p, gr_n) = 2, 合计 2(n-2)+2 = 2n-2",
    },
    "units_base": {
        "kind": "global",
        "citation": "S-单位: H^1_f(Γ_T, Q_p(1)) = Z_S^* ⊗ Q_p, dim H^1_f(Γ_T, W_2) <= r+s-1",
    },
    "exact_recursion": {
        "kind": "carry",
        "citation": "正合序列递推: 0 -> H^1(Γ_T, gr_n) -> H^1_f(Γ_T, W_n) -> H^1_f(Γ_T, W_{n-1})",
    },
    "local_duality": {
        "kind": "h2",
        "citation": "局部对偶: H^2(N_v, gr_n) = H^0(N_v, χ^{2-n} ⊕ χ̄^{2-n})^* = 0, 故 Sha^2(gr_n) = H^2(N_T, gr_n) (n>=3)",
    },
    "poitou_tate": {
        "kind": "h2",
        "citation": "Poitou-Tate 对偶: Sha^2(gr_n) = Sha^1(Q_p(χ^{2-n}))^* ⊕ Sha^1(Q_p(χ̄^{2-n}))^*",
    },
    "inflation_restriction": {
        "kind": "h2",
        "citation": "膨胀-限制: Sha^1(Q_p(χ^{2-n})) = Hom_Λ(A⊗Q, Q_p(χ^{2-n}))",
    },
    "nonvanishing_all": {
        "kind": "h2",
        "citation": "对所有 k<0 的非零性: 𝓛 零化 A⊗Q 且 χ^{2-n}(𝓛) ≠ 0, Hom 为零, H^2 = 0 (n>=3)",
    },
    "nonvanishing_eventual": {
        "kind": "h2",
        "citation": "有限零点: k=2-n 不在例外集, χ^{2-n}(𝓛) ≠ 0, H^2 = 0 (n 充分大)",
    },
    "exceptional_level": {
        "kind": "h2",
        "citation": "例外层: χ^{2-n}(𝓛) 可能为零, H^2(Γ_T, gr_n) 只有上界",
    },
    "sigma_minus": {
        "kind": "global",
        "citation": "σ 交换两个一维因子: dim (gr_n)^- = 1",
    },
    "euler_characteristic": {
        "kind": "global",
        "citation": "整体 Euler 示性数: dim H^1(Γ_T, gr_n) = dim H^2(Γ_T, gr_n) + dim (gr_n)^-",
    },
}

CITATIONS: FrozenSet[str] = frozenset(rule["citation"] for rule in RULES.values())


def citation(rule_id: str) -> str:
    return glom(RULES, f"{rule_id}.citation")


def kind(rule_id: str) -> str:
    return glom(RULES, f"{rule_id}.kind")
