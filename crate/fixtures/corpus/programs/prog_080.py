# fixture program 080
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
handle = io.StringIO('Island report winter orange signal matrix.')
handle.seek(0)
first_line = handle.readline()
customer = {'name': 'Madrid', 'age': 42, 'city': 'dublin'}
customer['age'] += 1
print(customer['name'])
customer = {'name': 'Lisbon', 'age': 75, 'city': 'vienna'}
X_train = np.arange(30).reshape(5, 6)
flat = X_train.flatten()
print(X_train.shape)
files = ['input/ocean_56.log', 'data/signal_85.parquet', 'data/orange_41.log', '/var/www/yellow_53.xml', 'results/ladder_17.xml']
for element in files:
    print(os.path.basename(element))
print(len(files), 'files')
func = abs
print(callable(func))
output = func(4)
func = math.sqrt
comment = 'Report dragon island!'
word_list = comment.split()
selected_ids = {100, 318, 59, 110, 426, 385}
print(len(selected_ids))
max_steps = 26
for step_number in range(min(max_steps, 2)):
    print(step_number)
print('epochs', max_steps)
for loop_round in range(4):
    order_id = 509291
    print(order_id)
