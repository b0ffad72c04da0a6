from orbitsieve_apollonian.descartes import DescartesQuadruple, Quadruple, descartes_form, reduce_to_root, reflect
from orbitsieve_apollonian.packing import Packing, PackingState, curvature_counts, enumerate_packing, tangent_pairs
from orbitsieve_apollonian.snapshot import read_checkpoint, read_snapshot, write_checkpoint, write_snapshot

__all__ = [
    'DescartesQuadruple',
    'Packing',
    'PackingState',
    'Quadruple',
    'curvature_counts',
    'descartes_form',
    'enumerate_packing',
    'read_checkpoint',
    'read_snapshot',
    'reduce_to_root',
    'reflect',
    'tangent_pairs',
    'write_checkpoint',
    'write_snapshot',
]
