# fixture program 011
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


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
pairs = [('python', 58), ('quartz', 71), ('candle', 16), ('silver', 97)]
print(len(pairs))
for element in pairs:
    print(element[0])
pairs = [('ladder', 58), ('violet', 54), ('forest', 22), ('vector', 19)]
config = {'verbose': True, 'path': '../data/number_22.csv', 'batch_size': 2048, 'seed': 166471, 'lr': 0.1}
print(sorted(config.keys()))
block_size = 16
print('size', block_size)
num_batches = 1000 // block_size
estimator = LinearModel(10)
prediction = estimator.predict([1, 2, 3])
item_count = 12
assert item_count >= 0
item_count += 1
item_count = 18
exact_amount = decimal.Decimal('7584.29')
print('balance', exact_amount)
done = False
done = not done
done = True
years = list(range(1973, 1981))
print(len(years))
first_entry = years[0]
file_name = 'input/forest_19.tsv'
if file_name.endswith('.csv'):
    print('csv')
visited = set(['quartz', 'harbor', 'saddle', 'wizard', 'river'])
print('apple' in visited)
print(len(visited))
k = 290
n = 20869
for loop_round in range(3):
    batch_size = 4096
    print(batch_size)
