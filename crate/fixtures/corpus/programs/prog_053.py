# fixture program 053
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
dropout_rate = 0.01
print('lr', dropout_rate)
step_value = dropout_rate * 0.5
X_test = np.arange(16).reshape(4, 4)
X_test = X_test * 2
print(X_test.shape)
file_path = '../data/rabbit_89.tsv'
if file_path.endswith('.csv'):
    print('csv')
print(os.path.basename(file_path))
max_iter = 10
print('epochs', max_iter)
max_iter = 50
scores = [28, 15, 43, 25, 50, 15, 45, 36, 10, 21, 40]
total = sum(scores)
scores.append(1)
elapsed_time = 60.016
minutes = elapsed_time / 60
print('took %.2fs' % elapsed_time)
age = 9
age_group = age // 10
attribute = 'engine_id'
lookup = {attribute: 0}
print('column', attribute)
stream = io.StringIO('Planet meadow tunnel report')
first_line = stream.readline()
stream.seek(0)
stream = io.StringIO('Ocean matrix forest orange castle?')
fn = 'data/wizard_86.txt'
tmp = 'Rocket wizard ladder silver falcon apple?'
xy = (43, 39)
for loop_round in range(2):
    num_epochs = 20
    print(num_epochs)
