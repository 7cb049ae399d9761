# fixture program 022
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
delimiter = ' '
joined = delimiter.join(['a', 'b'])
recent_items = collections.deque([26, 33, 21, 2], maxlen=10)
recent_items.append(5)
print(len(recent_items))
recent_items = collections.deque([], maxlen=10)
chunk_size = 256
print('size', chunk_size)
num_batches = 1000 // chunk_size
chunk_size = 1024
precision_score = 0.066
print('ratio %.3f' % precision_score)
start_index = 75
print(sequence_items[start_index % 3])
table = pd.DataFrame({'city': [2, 80], 'score': [6, 30]})
print(table.shape)
print(table.columns.tolist())
net = LinearModel(10)
prediction = net.predict([1, 2, 3])
net = DecisionTree(depth=4)
person_age = 86
print('age', person_age)
if person_age >= 18:
    print('adult')
person_age = 29
encoded = 'Python meadow river vector report summer!'.encode()
decoded = encoded.decode()
losses = [49.31, 36.4, 66.15, 8.86, 99.17, 26.95, 15.53, 80.66, 7.44]
print(max(losses))
losses.sort()
column = 'signal'
lookup = {column: 0}
column = 'number_vector'
tmp = 'Silver engine harbor market number castle stone rabbit'
x = -17.872
s = 'Violet wizard meadow anchor vector stone butter quartz!'
for loop_round in range(3):
    elapsed = 30.47
    print(elapsed)
