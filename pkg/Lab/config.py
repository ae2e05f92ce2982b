import os
from dotenv import load_dotenv

# Charge le .env avant tout os.getenv() — une seule fois au démarrage
load_dotenv()

BASE_DIR = os.path.dirname(os.path.abspath(__file__))


# =============================================================================
# SIMULATEUR (statevector)
# =============================================================================

MIN_QUBITS = 1
MAX_QUBITS = int(os.getenv("QAOA_MAX_QUBITS", "24"))   # Garde mémoire — 2^24 amplitudes complexes = 256 Mo
NORM_TOLERANCE = 1e-9


# =============================================================================
# PROBLÈMES
# =============================================================================

# Nombre minimal de nœuds par topologie — en dessous le graphe est dégénéré
MIN_NODES = {
    "linear":   2,
    "cyclic":   3,
    "complete": 3,
}
DEFAULT_COUPLING = 1.0
INSTANCES_DIR = os.path.join(BASE_DIR, "instances")


# =============================================================================
# RECHERCHE EXHAUSTIVE (ES)
# =============================================================================

# Résolution par dimension — la grille P4 reste à 16^4 = 65 536 évaluations
ES_POINTS_PER_DIM = {
    "P2": 64,
    "P3": 32,
    "P4": 16,
}
ES_MAX_EVALUATIONS = int(os.getenv("QAOA_ES_MAX_EVALUATIONS", "10000000"))


# =============================================================================
# RECHERCHE LOCALE ITÉRÉE (ILS / SHC)
# =============================================================================

# Budget total ~6 300 évaluations en P2 — comparable à la grille ES 64×64
ILS_RESTARTS = 4
ILS_OUTER_ITERATIONS = 30
ILS_SHC_STEPS = 50
ILS_INITIAL_STEP_SIGMA = 0.4
ILS_SIGMA_DECAY = 0.92
ILS_KICK_SIGMA = 1.0


# =============================================================================
# EXPÉRIENCES
# =============================================================================

DEFAULT_SEED = int(os.getenv("QAOA_SEED", "1"))
DEFAULT_SHOTS = int(os.getenv("QAOA_SHOTS", "1024"))
TOP_STATES = 4                      # États les plus probables affichés par ligne
SUITE_WORKERS = int(os.getenv("QAOA_SUITE_WORKERS", "1"))
PARAMS_DECIMALS = 6                 # Précision des angles dans le CSV


# =============================================================================
# LOGS
# =============================================================================

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
