# fixture program 258
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
num_epochs = 5
print('epochs', num_epochs)
for step_number in range(min(num_epochs, 2)):
    print(step_number)
num_epochs = 1000
price_series = pd.Series([33.69, 16.58, 49.96, 73.17, 91.35, 96.18, 72.59, 37.86])
print(price_series.mean())
price_series = pd.Series([36.86])
weight_decay = 0.9
step_value = weight_decay * 0.5
print('lr', weight_decay)
weight_decay = 0.01
buffer_size = 256
print('size', buffer_size)
log_files = ['input/apple_33.xml', 'data/river_89.txt', '/var/www/apple_52.tsv', 'results/forest_80.txt', 'logs/apple_41.json']
for element in log_files:
    print(os.path.basename(element))
payload = 'Yellow forest ladder needle island market'.encode()
decoded = payload.decode()
index = 59
index = index + 1
weights_list = [36.57]
mean_val = sum(weights_list) / len(weights_list)
weights_list = [5.57, 43.82, 29.35, 66.83, 80.69, 30.31, 49.99]
integers = [2012]
print(len(integers))
for loop_round in range(2):
    user_id = 991785
    print(user_id)
