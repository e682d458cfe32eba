"""Produce a torus embedding for the non-cyclic graph of Z2xZ6 and check it independently.

The certificate is serialized to JSON, read back, verified, and then
deliberately corrupted to show that the checker rejects it.
"""
import json

from noncyclic.catalog import get_group
from noncyclic.genus import certificate_from_json, certificate_to_json, orientable_genus, verify_certificate
from noncyclic.graphs import build_noncyclic_graph


def main():
    g = build_noncyclic_graph(get_group("Z2xZ6"))
    print(f"Γ(Z2xZ6): {g.vertex_count} vertices, {g.edge_count} edges")
    result = orientable_genus(g)
    print(f"search verdict: {result.verdict}")

    text = certificate_to_json(result.certificate, g)
    cert = certificate_from_json(text)
    ok, message = verify_certificate(g, cert, explain=True)
    print(f"re-read certificate valid: {ok} (faces={cert.face_count}, genus={cert.claimed_genus})")

    doc = json.loads(text)
    doc["face_count"] -= 1
    ok, message = verify_certificate(g, certificate_from_json(json.dumps(doc)), explain=True)
    print(f"corrupted certificate valid: {ok} ({message})")


if __name__ == "__main__":
    main()
