# fixture program 237
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


def main():
    sequence_items = ['first', 'second', 'third']
    entries = [('tunnel', 10), ('jungle', 92), ('summer', 10), ('ladder', 34)]
    print(len(entries))
    indices = [2009, 2025, 1994, 2029, 1990]
    for element in indices:
        print(element)
    print(len(indices))
    max_iter = 100
    print('epochs', max_iter)
    field = 'quartz'
    print('column', field)
    field = 'stone'
    learning_rate = 0.005
    print('lr', learning_rate)
    step_value = learning_rate * 0.5
    learning_rate = 0.1
    stream = io.StringIO('Falcon island report bridge winter butter')
    stream.seek(0)
    first_line = stream.readline()
    visited_nodes = {260}
    print(len(visited_nodes))
    profile = {'name': 'Alice Planet', 'age': 17, 'city': 'berlin'}
    profile['age'] += 1
    profile = {'name': 'Oscar', 'age': 93, 'city': 'rome'}
    sentences = ['paris', 'madrid']
    sentences.append('extra')
    work_queue = collections.deque([2027, 2020, 2012, 2030, 2005, 2003, 2007, 2016, 2001, 2004, 2028], maxlen=10)
    work_queue.append(5)
    print(len(work_queue))
    a = 214
    k = 18
    fn = 'input/cloud_40.csv'
    for loop_round in range(4):
        current_year = 1976
        print(current_year)


main()
