from networkx.algorithms import isomorphism as isomorphism
