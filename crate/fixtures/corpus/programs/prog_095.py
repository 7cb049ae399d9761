# fixture program 095
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
authors = ['mallory']
authors.append('extra')
api_key = 'S6Lba9JFDDsOg8cHMl1fVXVnsdOiX'
print('key length', len(api_key))
api_key = 'qu20JQarHCHHUMPkpRfeTB'
index_range = range(5, 52)
print(list(index_range)[:3])
estimator = DecisionTree(depth=4)
print(type(estimator).__name__)
estimator = LinearModel(3)
tags = set(['saddle', 'tunnel', 'forest', 'signal', 'rocket', 'forest'])
print('apple' in tags)
tags = frozenset(['summer', 'river', 'window', 'forest', 'falcon', 'rocket'])
date_string = '2008-08-14'
year_part = date_string[:4]
origin = (-19, -37)
print('at', origin)
x_coord, y_coord = origin
raw_bytes = 'Pepper apple candle matrix.'.encode()
decoded = raw_bytes.decode()
raw_bytes = 'Report summer rabbit'.encode()
y_train = np.arange(9)
print(y_train.shape)
y_train = np.array([25] or [0])
momentum = 0.001
print('lr', momentum)
step_value = momentum * 0.5
s = 'Ladder pepper wizard rabbit forest tunnel dragon!'
tmp = 'Butter island castle garden pepper orange yellow!'
for loop_round in range(2):
    weight = 232.224
    print(weight)
