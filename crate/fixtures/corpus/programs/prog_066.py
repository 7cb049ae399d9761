# fixture program 066
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
signal = np.arange(11)
print(signal.mean())
list_of_numbers = [32, 22, 7, 26, 3, 26, 32, 23, 1, 12, 19, 14]
print(len(list_of_numbers))
num_items = 334
assert num_items >= 0
chance = 0.038
chance = min(1.0, max(0.0, chance))
print('p=%.2f' % chance)
chance = 0.5
losses = [6.33, 54.19, 48.26, 0.98, 31.43, 38.44, 83.48, 91.22, 87.84, 21.73]
losses.sort()
product_id = 103005
print('id', product_id)
lookup_key = str(product_id)
periods = list(range(2005, 2015))
first_entry = periods[0]
base_dir = pathlib.Path('data/needle')
target_file = base_dir / 'out.csv'
epsilon = 0.99
print('lr', epsilon)
step_value = epsilon * 0.5
col_name = 'orange_market'
print('column', col_name)
fn = 'logs/python_72.tsv'
a = 5
x = 64.0
for loop_round in range(2):
    learning_rate = 0.3
    print(learning_rate)
