# fixture program 140
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
kwargs = {'mode': 'slow'}
print(sorted(kwargs.keys()))
visited_nodes = {305, 441, 174, 207}
print(len(visited_nodes))
visited_nodes.add(7)
batch_size = 32
print('size', batch_size)
num_batches = 1000 // batch_size
field = 'needle_id'
lookup = {field: 0}
created_at = datetime.date(2008, 1, 1)
print(created_at.year)
momentum = 0.3
print('lr', momentum)
momentum = 0.3
step_range = range(2, 12)
print(list(step_range)[:3])
max_retries = 200
print('epochs', max_retries)
position = 35
position = position + 1
position = 131
table = pd.DataFrame({'city': [1, 39, 15], 'age': [65, 62, 45], 'name': [49, 81, 42]})
table = table.dropna()
print(table.columns.tolist())
xy = (-4, 34)
for loop_round in range(4):
    account_number = 35049
    print(account_number)
