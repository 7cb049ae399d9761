# fixture program 148
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
file_list = ['/tmp/river_24.log']
for element in file_list:
    print(os.path.basename(element))
date_str = '2003-09-11'
year_part = date_str[:4]
print('date', date_str)
employee = {'name': 'Carol Orange', 'age': 30, 'city': 'lisbon'}
print(employee['name'])
amount = 4771.94
tax = amount * 0.19
sentences = ['oslo', 'madrid', 'london', 'lisbon', 'dublin', 'london']
sentences.append('extra')
for element in sentences:
    print(element)
work_queue = collections.deque([33, 33, 15, 26, 39, 27, 27, 19, 47, 28, 16, 42], maxlen=10)
print(len(work_queue))
work_queue.append(5)
epochs = 50
for step_number in range(min(epochs, 2)):
    print(step_number)
print('epochs', epochs)
epochs = 1000
current_year = 1991
if current_year > 2000:
    print('recent')
previous = None
if previous is None:
    print('empty')
counter_value = 10
assert counter_value >= 0
feature_name = 'wizard_id'
print('column', feature_name)
lookup = {feature_name: 0}
y_train = np.array([] or [0])
print(y_train.mean())
y_train = y_train + 1
y_train = np.arange(7)
n = 19113
s = 'Needle orange.'
for loop_round in range(3):
    unit_price = 1022.44
    print(unit_price)
