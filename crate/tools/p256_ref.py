#!/usr/bin/env python3
"""Big-integer P-256 scalar multiplication, used to pin curve test vectors."""

P = 0xFFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFF
A = P - 3
B = 0x5AC635D8AA3A93E7B3EBBD55769886BC651D06B0CC53B0F63BCE3C3E27D2604B
N = 0xFFFFFFFF00000000FFFFFFFFFFFFFFFFBCE6FAADA7179E84F3B9CAC2FC632551
GX = 0x6B17D1F2E12C4247F8BCE6E563A440F277037D812DEB33A0F4A13945D898C296
GY = 0x4FE342E2FE1A7F9B8EE7EB4A7C0F9E162BCE33576B315ECECBB6406837BF51F5

assert (GY * GY - (GX**3 + A * GX + B)) % P == 0, "base point not on curve"


def add(p1, p2):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2 and (y1 + y2) % P == 0:
        return None
    if p1 == p2:
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, P) % P
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, P) % P
    x3 = (lam * lam - x1 - x2) % P
    y3 = (lam * (x1 - x3) - y1) % P
    return (x3, y3)


def mul(k, pt=(GX, GY)):
    acc = None
    while k:
        if k & 1:
            acc = add(acc, pt)
        pt = add(pt, pt)
        k >>= 1
    return acc


assert mul(N) is None, "group order mismatch"
two_g = mul(2)
assert two_g[0] == 0x7CF27B188D034F7E8A52380304B51AC3C08969E277F21B35A60B48FC47669978

for k in [
    1,
    2,
    3,
    N - 1,
    0xC9AFA9D845BA75166B5C215767B1D6934E50C3DB36E89B127B8A622B120F6721,
    0x1B22644A7BE026548810C378D0B2994EEFA6D2B9881803CB02CEFF865287D1B9,
]:
    x, y = mul(k)
    print(f"k={k:064x}")
    print(f"  x={x:064x}")
    print(f"  y={y:064x}")

# static-static shared point for a fixed key pair
ka = 0x3F49F6D4A3C55F3874C9B3E3D2103F504AFF607BEB40B7995899B8A6CD3C1ABD
kb = 0x55188B3D32F6BB9A900AFCFBEED4E72A59CB9AC2F19D7CFB6B4FDD49F47FC5FD
xa, ya = mul(ka)
xb, yb = mul(kb)
sx, sy = mul(ka, (xb, yb))
sx2, sy2 = mul(kb, (xa, ya))
assert (sx, sy) == (sx2, sy2)
print(f"pair a={ka:064x}")
print(f"     A.x={xa:064x}")
print(f"     A.y={ya:064x}")
print(f"pair b={kb:064x}")
print(f"     B.x={xb:064x}")
print(f"     B.y={yb:064x}")
print(f"shared.x={sx:064x}")
