# -*- coding: utf-8 -*-
"""
手写的 .cube 参照项，叠加在群胚目录的环境上下文之上
"""

GOLDEN_SOURCE = """
-- 反射、逆、复合
def refl_a = <x> a : Id (x. A) a a
def pinv = <x> hcom 0~>1 A a [x=0 y. p @ y | x=1 y. a] : Id (x. A) b a
def pq = <x> hcom 0~>1 A (p @ x) [x=0 y. a | x=1 y. q @ y] : Id (x. A) a c
def qr = <x> hcom 0~>1 A (q @ x) [x=0 y. b | x=1 y. r @ y] : Id (x. A) b d
def pii = <x> hcom 0~>1 A b [x=0 y. pinv @ y | x=1 y. b] : Id (x. A) a b
def ppinv = <x> hcom 0~>1 A (p @ x) [x=0 y. a | x=1 y. pinv @ y] : Id (x. A) a a
def pinvp = <x> hcom 0~>1 A (pinv @ x) [x=0 y. b | x=1 y. p @ y] : Id (x. A) b b
def rp = <x> hcom 0~>1 A a [x=0 y. a | x=1 y. p @ y] : Id (x. A) a b
def rbinv = <x> hcom 0~>1 A b [x=0 y. b | x=1 y. b] : Id (x. A) b b

-- 右消去
def rc_p = <z> <x> hcom 0~>1 A (p @ x) [x=0 y. a | x=1 y. pinv @ y | z=0 y. hcom 0~>x A a [y=0 w. p @ w | y=1 w. a] | z=1 y. hcom 0~>y A (p @ x) [x=0 w. a | x=1 w. pinv @ w]] : Id (z. Id (x. A) a a) (<x> a) ppinv

-- 方块的交换
def sinv = <x> hcom 0~>1 A a [x=0 y. s @ y | x=1 y. a] : Id (x. A) c a
def tinv = <x> hcom 0~>1 A b [x=0 y. t @ y | x=1 y. b] : Id (x. A) d b
def swap_sigma = <x> <z> hcom 0~>1 A (p @ z) [x=0 y. sigma @ y @ z | x=1 y. p @ z | z=0 y. hcom 0~>y A a [x=0 w. s @ w | x=1 w. a] | z=1 y. hcom 0~>y A b [x=0 w. t @ w | x=1 w. b]] : Id (x. Id (z. A) (sinv @ x) (tinv @ x)) r p

-- p = (p⁻¹)⁻¹
def sq_x = <x> <y> hcom 0~>x A (pinv @ y) [y=0 w. b | y=1 w. p @ w] : Id (x. Id (y. A) b (p @ x)) pinv pinvp
def swap1 = <x> <z> hcom 0~>1 A (pinv @ z) [x=0 y. sq_x @ y @ z | x=1 y. pinv @ z | z=0 y. hcom 0~>y A b [x=0 w. b | x=1 w. b] | z=1 y. hcom 0~>y A a [x=0 w. p @ w | x=1 w. a]] : Id (x. Id (z. A) (rbinv @ x) (pinv @ x)) pinvp pinv
def swap2 = <x> <z> hcom 0~>1 A (pinvp @ z) [x=0 y. swap1 @ y @ z | x=1 y. pinvp @ z | z=0 y. hcom 0~>y A b [x=0 w. b | x=1 w. b] | z=1 y. hcom 0~>y A b [x=0 w. pinv @ w | x=1 w. b]] : Id (x. Id (z. A) (rbinv @ x) (pii @ x)) pinv pinvp
def inversability_p = <z> <x> hcom 0~>1 A (hcom 0~>1 A b [x=0 y. hcom 0~>z A b [y=0 w. b | y=1 w. b] | x=1 y. b | z=0 y. b | z=1 y. hcom 0~>y A b [x=0 w. b | x=1 w. b]]) [x=0 y. pinv @ y | x=1 y. pinvp @ y | z=0 y. sq_x @ x @ y | z=1 y. swap2 @ x @ y] : Id (z. Id (x. A) a b) p pii

-- 左消去
def pinv_pii = <x> hcom 0~>1 A (pinv @ x) [x=0 y. b | x=1 y. pii @ y] : Id (x. A) b b
def rc_pinv = <z> <x> hcom 0~>1 A (pinv @ x) [x=0 y. b | x=1 y. pii @ y | z=0 y. hcom 0~>x A b [y=0 w. pinv @ w | y=1 w. b] | z=1 y. hcom 0~>y A (pinv @ x) [x=0 w. b | x=1 w. pii @ w]] : Id (z. Id (x. A) b b) (<x> b) pinv_pii
def rc_pinv_inv = <v> hcom 0~>1 (Id (x. A) b b) (<x> b) [v=0 y. rc_pinv @ y | v=1 y. <x> b] : Id (v. Id (x. A) b b) pinv_pii (<x> b)
def op1_pinv = <z> <x> hcom 0~>1 A (hcom 0~>z A (pinv @ x) [x=0 w. b | x=1 w. pii @ w]) [x=0 y. b | x=1 y. pii @ z | z=0 y. pinv @ x | z=1 y. rc_pinv_inv @ y @ x] : Id (z. Id (x. A) b (pii @ z)) pinv (<x> b)
def inversability_inv = <v> hcom 0~>1 (Id (x. A) a b) p [v=0 y. inversability_p @ y | v=1 y. p] : Id (v. Id (x. A) a b) pii p
def lc_p = <z> <x> hcom 0~>1 A (pinv @ x) [x=0 y. b | x=1 y. inversability_inv @ z @ y | z=0 y. op1_pinv @ y @ x | z=1 y. hcom 0~>y A (pinv @ x) [x=0 w. b | x=1 w. p @ w]] : Id (z. Id (x. A) b b) (<x> b) pinvp

-- 左单位
def lc_inv = <v> hcom 0~>1 (Id (x. A) b b) (<x> b) [v=0 y. lc_p @ y | v=1 y. <x> b] : Id (v. Id (x. A) b b) pinvp (<x> b)
def op2_p = <z> <x> hcom 0~>1 A (hcom 0~>z A (pinv @ x) [x=0 w. b | x=1 w. p @ w]) [x=0 y. b | x=1 y. p @ z | z=0 y. pinv @ x | z=1 y. lc_inv @ y @ x] : Id (z. Id (x. A) b (p @ z)) pinv (<x> b)
def lu_p = <z> <x> hcom 0~>1 A (hcom 0~>x A a [z=0 w. p @ w | z=1 w. a]) [x=0 y. a | x=1 y. op2_p @ y @ z | z=0 y. p @ x | z=1 y. hcom 0~>y A a [x=0 w. a | x=1 w. p @ w]] : Id (z. Id (x. A) a b) p rp

-- 类型线上的异质版本
def Pinv = <x> hcom 0~>1 U A [x=0 y. P @ y | x=1 y. A] : Id (x. U) B A
def PQ = <x> hcom 0~>1 U (P @ x) [x=0 y. A | x=1 y. Q @ y] : Id (x. U) A C
def het_inv_hp = <x> com 0~>1 (y. hcom 0~>y U A [x=0 w. P @ w | x=1 w. A]) ha [x=0 y. hp @ y | x=1 y. ha] : Id (x. Pinv @ x) hb ha
def het_comp_hpq = <x> com 0~>1 (y. hcom 0~>y U (P @ x) [x=0 w. A | x=1 w. Q @ w]) (hp @ x) [x=0 y. ha | x=1 y. hq @ y] : Id (x. PQ @ x) ha hc
"""

# 目录构造名 -> 参照定义名
GOLDEN_TERMS = {
    "refl": "refl_a",
    "inv": "pinv",
    "comp": "pq",
    "rc": "rc_p",
    "swap": "swap_sigma",
    "inversability": "inversability_p",
    "lc": "lc_p",
    "lu": "lu_p",
    "het_inv": "het_inv_hp",
    "het_comp": "het_comp_hpq",
}
